"""Generators of the even-half stabilizer of the class (1,0,-n) and their
character content.

An SL4 block embeds through the functorial wedge action on the spinor
module; reflection pairs in square +2 classes (1, A, n) come from the
24-dimensional algebra; the grading involution and the central elements
complete the generator kinds.  The induced action on the rank-7
orthogonal complement carries the sign convention of the second-cohomology
lattice (positive part of rank 3), with an extra global sign for
orientation-reversing elements.
"""

import random

from .clifford import (
    group_flags,
    mukai_triple,
    splus_lattice,
    splus_pairing,
)
from .exact import IntMatrix, is_primitive, smith_normal_form, vector_gcd
from .lattice import (
    IntLattice,
    LatticeIsometry,
    chi_character,
    det_character,
    discriminant_group,
    ort_character,
    signed_reflection,
)
from .triality import (
    AXAutomorphism,
    alpha_tilde_element,
    ax_element,
    m_tilde_pair,
    mu_tilde,
    multiplication_operator,
    splus_block,
    tau_tilde,
)

# conventions self-test: (s_n, s_n)_{S+} = -2n and ((1,A,n),(1,A,n))_{S+}
# = 2n - int(A^2), pinning the sign relating the two pairings
_sn5 = mukai_triple(1, [0] * 6, -5)
assert splus_pairing(_sn5, _sn5) == -10
_t = mukai_triple(1, (1, 0, 0, 0, 0, 1), 2)  # int(A^2) = 2, n = 2
assert splus_pairing(_t, _t) == 2 * 2 - 2
del _sn5, _t

SPLUS_LATTICE = splus_lattice()
PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def s_n(n):
    return mukai_triple(1, [0] * 6, -n)


def h2_square(a6):
    """int(A ^ A) for a degree-two class with six lex-pair coordinates."""
    return 2 * (a6[0] * a6[5] - a6[1] * a6[4] + a6[2] * a6[3])


def perp_basis(n):
    """Integral basis of the orthogonal complement of (1,0,-n):
    (1,0,n) followed by the six degree-two classes."""
    basis = [mukai_triple(1, [0] * 6, n)]
    for k in range(6):
        h = [0] * 6
        h[k] = 1
        basis.append(mukai_triple(0, h, 0))
    return basis


def bbf_lattice(n):
    """The rank-7 lattice of the orthogonal complement with the
    second-cohomology sign (positive part of rank 3): minus the ambient
    even-half pairing."""
    basis = perp_basis(n)
    gram = [[-splus_pairing(u, v) for v in basis] for u in basis]
    return IntLattice(gram, label="H2(n=%d)" % n)


def perp_coords(vec8, n):
    """Coordinates of an even-half vector in the perp basis; raises if the
    vector is not orthogonal to (1,0,-n)."""
    r = vec8[0]
    if vec8[7] != r * n:
        raise ValueError("vector is not orthogonal to (1,0,-n)")
    return (r,) + tuple(vec8[1:7])


class StabilizerGenerator:
    """A generator of the even-half stabilizer with its algebra realization
    and the induced isometry of the rank-7 complement."""

    __slots__ = ("kind", "data", "n", "ax", "_perp")

    def __init__(self, kind, data, n, ax):
        self.kind = kind
        self.data = data
        self.n = n
        self.ax = ax
        self._perp = None
        sn = s_n(n)
        image = splus_block(ax.apply(ax_element(s_plus=sn)))
        if tuple(image) != tuple(sn):
            raise ValueError("%s realization does not fix (1,0,-%d)" % (kind, n))

    def splus_matrix(self):
        m = self.ax.matrix
        return IntMatrix([[m[16 + i, 16 + j] for j in range(8)] for i in range(8)])

    def v_matrix(self):
        m = self.ax.matrix
        return IntMatrix([[m[i, j] for j in range(8)] for i in range(8)])

    def orientation_sign(self):
        """ort of the even-half action (positive part of rank 4);
        -1 exactly off the Spin subgroup."""
        iso = LatticeIsometry(SPLUS_LATTICE, self.splus_matrix())
        return ort_character(SPLUS_LATTICE, iso)

    def perp_action(self):
        """The induced isometry of the rank-7 second-cohomology lattice:
        the restriction of the even-half action, globally negated for
        orientation-reversing elements."""
        if self._perp is None:
            eps = self.orientation_sign()
            m8 = self.splus_matrix()
            lat = bbf_lattice(self.n)
            cols = []
            for b in perp_basis(self.n):
                img = m8.apply(b)
                cols.append(perp_coords(tuple(eps * x for x in img), self.n))
            self._perp = LatticeIsometry(lat, IntMatrix(list(zip(*cols))))
        return self._perp


def sl4_generator(m, n):
    """Wedge-functorial action of a determinant-one 4x4 integer matrix;
    fixes (1,0,0) and (0,0,1), hence every (1,0,-n)."""
    if not isinstance(m, IntMatrix):
        m = IntMatrix(m)
    if m.det() != 1:
        raise ValueError("sl4 generator needs determinant 1")
    s16 = _wedge_powers(m)
    flags = group_flags(s16)
    assert flags.in_spin, "wedge action is not a Spin element"
    dual = m.to_rat().inverse().transpose()
    assert dual.is_integral()
    expected_v = _block_diag(m, dual.to_int())
    assert flags.rho == expected_v, "conjugation action differs from M + dual"
    return StabilizerGenerator("sl4", m, n, mu_tilde(s16, flags))


def _wedge_powers(m):
    from itertools import combinations

    rows = [[0] * 16 for _ in range(16)]
    rows[0][0] = 1
    for k in range(1, 5):
        for cols in combinations(range(4), k):
            bmask = sum(1 << c for c in cols)
            for rws in combinations(range(4), k):
                amask = sum(1 << r for r in rws)
                sub = IntMatrix([[m[i, j] for j in cols] for i in rws])
                rows[amask][bmask] = sub.det()
    return IntMatrix(rows)


def _block_diag(a, b):
    n = a.rows + b.rows
    rows = [[0] * n for _ in range(n)]
    for i in range(a.rows):
        for j in range(a.cols):
            rows[i][j] = a[i, j]
    for i in range(b.rows):
        for j in range(b.cols):
            rows[a.rows + i][a.cols + j] = b[i, j]
    return IntMatrix(rows)


def pair_reflection_generator(a1, a2, n):
    """The product of the two reflections in t_i = (1, A_i, n), realized on
    the 24-dimensional algebra; requires int(A_i^2) = 2n-2 with A_i
    primitive, so each t_i has square +2."""
    for a in (a1, a2):
        if h2_square(a) != 2 * n - 2:
            raise ValueError("need int(A^2) = 2n-2 = %d, got %d"
                             % (2 * n - 2, h2_square(a)))
        if not is_primitive(a):
            raise ValueError("A must be primitive")
    t1 = mukai_triple(1, a1, n)
    t2 = mukai_triple(1, a2, n)
    assert splus_pairing(t1, t1) == 2 and splus_pairing(t2, t2) == 2
    return StabilizerGenerator("pair_reflection", (tuple(a1), tuple(a2)), n,
                               m_tilde_pair(t1, t2))


def h2_pair_generator(c1, c2, n):
    """Product of two reflections in degree-two classes of equal square
    +-2; fixes (1,0,-n) since degree-two classes are orthogonal to it."""
    s1 = -h2_square(c1)
    s2 = -h2_square(c2)
    if s1 not in (2, -2) or s1 != s2:
        raise ValueError("need equal even-half squares +-2")
    y1 = mukai_triple(0, c1, 0)
    y2 = mukai_triple(0, c2, 0)
    return StabilizerGenerator("h2_pair", (tuple(c1), tuple(c2)), n,
                               m_tilde_pair(y1, y2))


def tau_tilde_generator(n):
    return StabilizerGenerator("tilde_tau", None, n, tau_tilde())


def alpha_tilde_generator(n):
    """The grading involution: -1 on V and S-, identity on S+."""
    return StabilizerGenerator("tilde_alpha", None, n,
                               mu_tilde(alpha_tilde_element()))


def minus_one_generator(n):
    """-1 of the even-half spin group: identity standard action on S+,
    -1 on V + S-.  The same algebra element as the grading involution,
    reached from the other side of the triality identification (the
    center of the full spin image meets the stabilizer in exactly this
    involution: the other central elements negate (1,0,-n))."""
    rows = [[0] * 24 for _ in range(24)]
    for i in range(8):
        rows[i][i] = -1
        rows[8 + i][8 + i] = -1
        rows[16 + i][16 + i] = 1
    return StabilizerGenerator("minus_one", None, n,
                               AXAutomorphism(IntMatrix(rows)))


def word_generator(parts, n):
    """Product of already-built generators, as a single generator."""
    ax = parts[0].ax
    for p in parts[1:]:
        ax = ax @ p.ax
    return StabilizerGenerator("word", tuple(p.kind for p in parts), n, ax)


# --- mod n representation ---------------------------------------------------

class ModNMatrix:
    """4x4 matrix over Z/n, invertible."""

    __slots__ = ("n", "data")

    def __init__(self, n, data):
        self.n = n
        self.data = tuple(tuple(x % n for x in row) for row in data)
        det = IntMatrix(self.data).det() % n
        from math import gcd

        if gcd(det, n) != 1:
            raise ValueError("matrix is not invertible mod %d" % n)

    def __eq__(self, other):
        return isinstance(other, ModNMatrix) and self.n == other.n \
            and self.data == other.data

    def __matmul__(self, other):
        prod = IntMatrix(self.data) @ IntMatrix(other.data)
        return ModNMatrix(self.n, prod.data)

    def __repr__(self):
        return "ModNMatrix(%d, %r)" % (self.n, [list(r) for r in self.data])


def mod_n_rep(gen, n=None):
    """Reduce the rank-8 action mod n, check that the dual summand is
    invariant, and return the induced map on the quotient."""
    if n is None:
        n = gen.n
    v = gen.v_matrix()
    for i in range(4):
        for j in range(4, 8):
            if v[i, j] % n != 0:
                raise ValueError("dual summand is not invariant mod %d "
                                 "(element does not stabilize the class)" % n)
    return ModNMatrix(n, [[v[i, j] for j in range(4)] for i in range(4)])


# --- cokernel of multiplication by a primitive negative class ---------------

def gamma_w_cokernel(w):
    """Invariant factors of multiplication V -> S- by a primitive even-half
    class w of square -2n, plus the -n identity law of the adjoint
    composite.  Returns (factors, n)."""
    w = tuple(w)
    ww = splus_pairing(w, w)
    if ww >= 0 or ww % 2 != 0:
        raise ValueError("class must have negative even square")
    n = -ww // 2
    if vector_gcd(w) != 1:
        raise ValueError("class must be primitive")
    mult = multiplication_operator(ax_element(s_plus=w))
    m_w = IntMatrix([[mult[8 + i, j] for j in range(8)] for i in range(8)])
    m_w_dag = IntMatrix([[mult[i, 8 + j] for j in range(8)] for i in range(8)])
    comp = m_w_dag @ m_w
    assert comp == IntMatrix.identity(8).scale(-n), \
        "adjoint composite is not multiplication by -n"
    snf = smith_normal_form(m_w)
    return snf.invariant_factors, n


# --- deterministic sampling --------------------------------------------------

def _elementary_sl4():
    out = []
    for i in range(4):
        for j in range(4):
            if i == j:
                continue
            for s in (1, -1):
                m = [[int(a == b) for b in range(4)] for a in range(4)]
                m[i][j] = s
                out.append(IntMatrix(m))
    return tuple(out)


ELEMENTARY_SL4 = _elementary_sl4()


def random_sl4(rng, length=3):
    m = IntMatrix.identity(4)
    for _ in range(length):
        m = m @ rng.choice(ELEMENTARY_SL4)
    return m


def find_h2_with_square(target, rng, tries=10000, bound=3):
    """A primitive degree-two class A with int(A^2) = target, by seeded
    bounded search."""
    b = bound
    for attempt in range(tries):
        a = tuple(rng.randint(-b, b) for _ in range(6))
        if any(a) and h2_square(a) == target and is_primitive(a):
            return a
        if attempt % 1000 == 999:
            b += 1
    raise ValueError("no degree-two class of square %d found" % target)


def sample_generators(n, count, rng, kinds=("sl4", "pair_reflection",
                                            "tilde_tau", "tilde_alpha",
                                            "minus_one")):
    """A deterministic list of stabilizer generators of the given kinds."""
    out = []
    while len(out) < count:
        kind = kinds[len(out) % len(kinds)]
        if kind == "sl4":
            out.append(sl4_generator(random_sl4(rng), n))
        elif kind == "pair_reflection":
            a1 = find_h2_with_square(2 * n - 2, rng)
            a2 = find_h2_with_square(2 * n - 2, rng)
            out.append(pair_reflection_generator(a1, a2, n))
        elif kind == "tilde_tau":
            out.append(tau_tilde_generator(n))
        elif kind == "tilde_alpha":
            out.append(alpha_tilde_generator(n))
        elif kind == "minus_one":
            out.append(minus_one_generator(n))
        else:
            raise ValueError("unknown generator kind %r" % kind)
    return out


def h2_wedge(a, b):
    """int(A ^ B) for two degree-two classes in lex-pair coordinates."""
    return (a[0] * b[5] + a[5] * b[0]) - (a[1] * b[4] + a[4] * b[1]) \
        + (a[2] * b[3] + a[3] * b[2])


def _bivector_matrix(h6):
    """Antisymmetric 4x4 coefficient matrix of a degree-two class."""
    b = [[0] * 4 for _ in range(4)]
    for (i, j), c in zip(PAIRS, h6):
        b[i][j] = c
        b[j][i] = -c
    return IntMatrix(b)


def bivector_transvection(h6, v):
    """A determinant-one matrix fixing the degree-two class under the wedge
    action: x -> x - (x^T adj(B) v) v with B the class's coefficient
    matrix."""
    b = _bivector_matrix(h6)
    det = b.det()
    if det == 0:
        raise ValueError("degenerate degree-two class")
    adj = b.to_rat().inverse().scale(det)
    assert adj.is_integral()
    adj = adj.to_int()
    cv = adj.apply(v)
    rows = [[int(i == j) - v[i] * cv[j] for j in range(4)] for i in range(4)]
    m = IntMatrix(rows)
    assert m.det() == 1
    return m


def stabilizer_v_actions(n, count, rng):
    """V-action matrices of a generating sample of the stabilizer's spin
    part: elementary SL4 embeds, random SL4 words, and +2 pair
    reflections."""
    out = []
    for m in ELEMENTARY_SL4[:12]:
        out.append(sl4_generator(m, n).v_matrix())
    while len(out) < count:
        if len(out) % 2 == 0:
            out.append(sl4_generator(random_sl4(rng), n).v_matrix())
        else:
            a1 = find_h2_with_square(2 * n - 2, rng)
            a2 = find_h2_with_square(2 * n - 2, rng)
            out.append(pair_reflection_generator(a1, a2, n).v_matrix())
    return out


def wh_stabilizer_v_actions(n, h6, count, rng):
    """V-actions of elements stabilizing both (1,0,-n) and the degree-two
    class: bivector-fixing transvections plus reflection pairs orthogonal
    to the class."""
    h6 = tuple(h6)
    hvec = mukai_triple(0, h6, 0)
    out = []
    gens = []
    seen = 0
    while len(gens) < count:
        seen += 1
        if len(gens) % 3 != 2:
            v = tuple(rng.randint(-2, 2) for _ in range(4))
            if not any(v):
                continue
            g = sl4_generator(bivector_transvection(h6, v), n)
        else:
            a1 = _find_orthogonal_class(2 * n - 2, h6, rng)
            a2 = _find_orthogonal_class(2 * n - 2, h6, rng)
            g = pair_reflection_generator(a1, a2, n)
        image = splus_block(g.ax.apply(ax_element(s_plus=hvec)))
        assert tuple(image) == tuple(hvec), "generator moves the polarization"
        gens.append(g)
        out.append(g.v_matrix())
    return out


def _find_orthogonal_class(square, h6, rng, tries=20000, bound=3):
    b = bound
    for attempt in range(tries):
        a = tuple(rng.randint(-b, b) for _ in range(6))
        if any(a) and h2_square(a) == square and h2_wedge(a, h6) == 0 \
                and is_primitive(a):
            return a
        if attempt % 2000 == 1999:
            b += 1
    raise ValueError("no orthogonal degree-two class of square %d" % square)


def det_chi_report(n, sample_count, seed):
    """The character suite: reflection character identities, generator
    det*chi values, the grading involution's induced action, and the
    discriminant-group order of the complement.  Returns a dict."""
    rng = random.Random("detchi:%d:%d" % (n, seed))
    lat = bbf_lattice(n)
    disc = discriminant_group(lat)
    report = {
        "n": n,
        "seed": seed,
        "disc_order_computed": disc.order,
        "disc_order_formula_2dim_plus_2": 2 * (2 * n - 2) + 2,
        "disc_orders_agree": disc.order == 2 * (2 * n - 2) + 2,
        "reflection_checks": 0,
        "reflection_failures": 0,
        "generator_checks": 0,
        "generator_failures": 0,
        "tau_tilde_ok": False,
    }
    # raw reflections: det(r_u) = (u,u)/2, chi(r_u) = -(u,u)/2
    found = 0
    while found < 50:
        coords = tuple(rng.randint(-3, 3) for _ in range(7))
        uu = lat.square(coords)
        if uu not in (2, -2):
            continue
        found += 1
        r = signed_reflection(lat, coords)
        ok = (det_character(r) == uu // 2
              and chi_character(lat, r, disc) == -uu // 2)
        report["reflection_checks"] += 1
        if not ok:
            report["reflection_failures"] += 1
    # generated stabilizer elements: fix s_n, det*chi = +1 on the complement
    gens = sample_generators(n, sample_count, rng)
    words = list(gens)
    for _ in range(max(0, sample_count - len(gens))):
        words.append(word_generator(rng.sample(gens, 2), n))
    for g in words:
        iso = g.perp_action()
        ok = det_character(iso) * chi_character(lat, iso, disc) == 1
        report["generator_checks"] += 1
        if not ok:
            report["generator_failures"] += 1
    # the grading involution fixes degree two and negates (1,0,n)
    tt = tau_tilde_generator(n).perp_action()
    e0 = tuple(int(i == 0) for i in range(7))
    fixes_h2 = all(tt.apply(tuple(int(i == k) for i in range(7)))
                   == tuple(int(i == k) for i in range(7)) for k in range(1, 7))
    negates = tt.apply(e0) == tuple(-x for x in e0)
    report["tau_tilde_ok"] = fixes_h2 and negates \
        and det_character(tt) == -1 \
        and det_character(tt) * chi_character(lat, tt, disc) == 1
    report["ok"] = (report["reflection_failures"] == 0
                    and report["generator_failures"] == 0
                    and report["tau_tilde_ok"])
    return report
