"""Clifford algebra on the rank-16 spinor module: relations, monomials,
tau/alpha, group membership, spinor pairing."""

import random

import pytest

from kummer_spin.clifford import (
    ALL,
    GEN_MATRICES,
    NotInCliffordGroup,
    act_vector,
    alpha,
    clifford_embed,
    degree,
    group_flags,
    monomial_decompose,
    monomial_matrix,
    monomial_rank,
    monomial_recompose,
    mukai_triple,
    pairing_s,
    sminus_lattice,
    splus_embed,
    splus_lattice,
    splus_pairing,
    star,
    tau,
    tau_degree_sign,
    v_lattice,
    v_pairing,
)
from kummer_spin.exact import IntMatrix
from kummer_spin.lattice import reflection


E1 = (1, 0, 0, 0, 0, 0, 0, 0)
E1S = (0, 0, 0, 0, 1, 0, 0, 0)


def basis_vector(k):
    return tuple(int(i == k) for i in range(8))


def test_act_vector_wedge_and_contract():
    one = tuple(int(m == 0) for m in range(16))
    assert act_vector(E1, one) == tuple(int(m == 1) for m in range(16))
    e12 = tuple(int(m == 0b0011) for m in range(16))
    assert act_vector(E1S, e12) == tuple(int(m == 0b0010) for m in range(16))


def test_contraction_of_point_class():
    pt = tuple(int(m == ALL) for m in range(16))
    out = act_vector(E1S, pt)
    assert out == tuple(int(m == 0b1110) for m in range(16))
    # PD(e2^e3^e4) pairs to -1 against e1 (and 0 against e2,e3,e4)
    for j in range(4):
        ej = tuple(int(m == 1 << j) for m in range(16))
        integral = sum(
            out[a] * ej[ALL ^ a] * _merge(a, ALL ^ a) for a in range(16)
        )
        assert integral == (-1 if j == 0 else 0)


def _merge(a, b):
    from kummer_spin.clifford import merge_sign

    return merge_sign(a, b)


def test_clifford_relation_all_basis_pairs():
    for i in range(8):
        for j in range(8):
            vi, vj = basis_vector(i), basis_vector(j)
            anti = GEN_MATRICES[i] @ GEN_MATRICES[j] + GEN_MATRICES[j] @ GEN_MATRICES[i]
            expected = IntMatrix.identity(16).scale(v_pairing(vi, vj))
            assert anti == expected


def test_clifford_relation_random_vectors():
    rng = random.Random(3)
    for _ in range(1000):
        v = tuple(rng.randint(-5, 5) for _ in range(8))
        w = tuple(rng.randint(-5, 5) for _ in range(8))
        mv, mw = clifford_embed(v), clifford_embed(w)
        anti = mv @ mw + mw @ mv
        assert anti == IntMatrix.identity(16).scale(v_pairing(v, w))


def test_isotropic_square_and_unit_square():
    assert (clifford_embed(E1) @ clifford_embed(E1)).is_zero()
    x1 = tuple(a + b for a, b in zip(E1, E1S))
    m = clifford_embed(x1)
    assert (m @ m).is_identity()


def test_monomial_rank_full():
    assert monomial_rank() == 256


def test_monomial_decompose_basics():
    ident = IntMatrix.identity(16)
    coeffs = monomial_decompose(ident)
    assert coeffs[0] == 1 and all(c == 0 for m, c in enumerate(coeffs) if m != 0)
    coeffs = monomial_decompose(GEN_MATRICES[0])
    assert coeffs[1] == 1 and sum(abs(c) for c in coeffs) == 1


def test_monomial_roundtrip_random_products():
    rng = random.Random(17)
    for _ in range(100):
        x = IntMatrix.identity(16)
        for _ in range(5):
            x = x @ GEN_MATRICES[rng.randrange(8)]
        coeffs = monomial_decompose(x)
        assert monomial_recompose(coeffs) == x


def test_tau_on_spinor_subalgebra():
    # the embedding of H^* sends the subset monomial to the product of its
    # wedge generators; tau multiplies degree i by (-1)^(i(i-1)/2)
    for mask in range(16):
        x = monomial_matrix(mask)  # wedge-only monomial
        assert tau(x) == x.scale(tau_degree_sign(degree(mask)))


def test_tau_fixes_vectors_and_antimultiplies():
    rng = random.Random(5)
    for k in range(8):
        assert tau(GEN_MATRICES[k]) == GEN_MATRICES[k]
    m1, m2 = GEN_MATRICES[0], GEN_MATRICES[1]
    assert tau(m1 @ m2) == m2 @ m1
    assert tau(m1 @ m2) == (m1 @ m2).scale(-1)
    for _ in range(100):
        x = clifford_embed(tuple(rng.randint(-3, 3) for _ in range(8)))
        y = clifford_embed(tuple(rng.randint(-3, 3) for _ in range(8)))
        assert tau(x @ y) == tau(y) @ tau(x)
        assert tau(tau(x @ y)) == x @ y
        assert alpha(x @ y) == alpha(x) @ alpha(y)
        assert alpha(alpha(x @ y)) == x @ y


def test_group_flags_vector_cases():
    # v with Q(v) = -1 lies in Pin and -rho(v) is the reflection by v
    vlat = v_lattice()
    v = tuple(a - b for a, b in zip(E1, E1S))  # Q = -1
    flags = group_flags(clifford_embed(v))
    assert flags.in_pin and not flags.in_spin and flags.parity == "odd"
    refl = reflection(vlat, v)
    assert flags.rho.scale(-1) == refl.matrix

    # x1 = e1 + e1*: N = +1, x x* = -1: in G0 but not Pin
    x1 = tuple(a + b for a, b in zip(E1, E1S))
    flags = group_flags(clifford_embed(x1))
    assert flags.norm == 1 and flags.orientation == -1
    assert flags.in_g0 and not flags.in_pin

    # product of two Q = -1 vectors lies in Spin
    w = (0, 1, 0, 0, 0, -1, 0, 0)
    assert v_pairing(w, w) == -2
    prod = clifford_embed(v) @ clifford_embed(w)
    flags = group_flags(prod)
    assert flags.in_spin


def test_group_flags_rejects_non_group_elements():
    x = IntMatrix.identity(16)
    rows = [list(r) for r in x.data]
    rows[0][5] = 1  # breaks V-stabilization but keeps invertibility
    with pytest.raises(NotInCliffordGroup):
        group_flags(IntMatrix(rows))


def test_minus_rho_reproduces_reflections():
    vlat = v_lattice()
    rng = random.Random(29)
    found = 0
    while found < 100:
        v = tuple(rng.randint(-3, 3) for _ in range(8))
        if v_pairing(v, v) not in (2, -2):
            continue
        found += 1
        flags = group_flags(clifford_embed(v))
        assert flags.rho.scale(-1) == reflection(vlat, v).matrix


def test_pairing_s_values():
    for n in (1, 3, 5):
        sn = splus_embed(mukai_triple(1, [0] * 6, -n))
        assert pairing_s(sn, sn) == -2 * n
    one = splus_embed(mukai_triple(1, [0] * 6, 0))
    pt = splus_embed(mukai_triple(0, [0] * 6, 1))
    assert pairing_s(one, pt) == 1
    assert pairing_s(pt, one) == 1


def test_pairing_s_isometry_scaling():
    # (v s, v t)_S = Q(v) (s,t)_S
    rng = random.Random(41)
    for _ in range(50):
        v = tuple(rng.randint(-3, 3) for _ in range(8))
        s = tuple(rng.randint(-4, 4) for _ in range(16))
        t = tuple(rng.randint(-4, 4) for _ in range(16))
        q, rem = divmod(v_pairing(v, v), 2)
        assert rem == 0
        assert pairing_s(act_vector(v, s), act_vector(v, t)) == q * pairing_s(s, t)


def test_even_odd_grams_unimodular_even():
    for lat in (splus_lattice(), sminus_lattice()):
        assert abs(lat.gram.det()) == 1
        assert lat.is_even()
    # (s_n, s_n)_{S+} = -2n in the 8-dim coordinates
    sn = mukai_triple(1, [0] * 6, -5)
    assert splus_pairing(sn, sn) == -10


def test_norm_and_ort_multiplicative_on_samples():
    rng = random.Random(99)
    elements = []
    while len(elements) < 40:
        x = IntMatrix.identity(16)
        for _ in range(rng.randint(1, 3)):
            while True:
                v = tuple(rng.randint(-2, 2) for _ in range(8))
                if v_pairing(v, v) in (2, -2):
                    break
            x = x @ clifford_embed(v)
        elements.append(x)
    for _ in range(60):
        a = rng.choice(elements)
        b = rng.choice(elements)
        fa, fb, fab = group_flags(a), group_flags(b), group_flags(a @ b)
        assert fab.norm == fa.norm * fb.norm
        assert fab.orientation == fa.orientation * fb.orientation


def test_v_pairing_example():
    # x = (e1, 0), y = (0, e1*): the hyperbolic pairing gives 1
    x = (1, 0, 0, 0, 0, 0, 0, 0)
    y = (0, 0, 0, 0, 1, 0, 0, 0)
    assert v_pairing(x, y) == 1
    assert v_lattice().pairing(x, y) == 1


def test_json_helpers():
    from kummer_spin.clifford import clifford_to_json, spinor_to_json

    s = splus_embed(mukai_triple(1, [0] * 6, -2))
    assert spinor_to_json(s) == list(s)
    body = clifford_to_json(GEN_MATRICES[0])
    assert len(body) == 16 and len(body[0]) == 16


def test_spin_elements_have_trivial_norm():
    # kernel of the norm character contains the even unit-square products
    rng = random.Random(404)
    for _ in range(20):
        vs = []
        while len(vs) < 2:
            v = tuple(rng.randint(-2, 2) for _ in range(8))
            if v_pairing(v, v) == -2:
                vs.append(v)
        flags = group_flags(clifford_embed(vs[0]) @ clifford_embed(vs[1]))
        assert flags.in_spin and flags.norm == 1


def test_group_flags_rational_inverse_path():
    # 2*Id stabilizes V by conjugation but is not a unit of the integral
    # algebra: the membership test must go through the rational inverse
    x = IntMatrix.identity(16).scale(2)
    flags = group_flags(x)
    assert flags.in_g
    assert flags.norm is None and flags.orientation is None
    assert flags.rho == IntMatrix.identity(8)
    assert not flags.in_pin and not flags.in_g0
