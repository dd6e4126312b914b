"""The rank-16 spinor module and the integral Clifford algebra acting on it.

The spinor module S is the exterior algebra on four degree-one generators,
with coordinates indexed by subset bitmasks 0..15 (bit i = generator i+1
present, degree = popcount).  V is rank 8 with hyperbolic pairing between
the wedge generators (indices 0..3) and the contraction generators
(indices 4..7).  The algebra map sends a V-vector to wedge + contraction
operators; products of the 8 generator matrices over subsets give the 256
monomial basis of C(V) = End(S).
"""

from .exact import IntMatrix, RatMatrix
from .lattice import IntLattice

ALL = 15  # full subset {1,2,3,4}


def degree(mask):
    return bin(mask).count("1")


def _sign_below(mask, i):
    """(-1)^(number of set bits of mask below i)."""
    return -1 if degree(mask & ((1 << i) - 1)) & 1 else 1


def _gen_entries(k):
    """Sparse entries (row, col, sign) of the k-th generator matrix.

    k in 0..3: wedge by generator k; k in 4..7: contraction by the
    dual generator k-4.
    """
    entries = []
    if k < 4:
        bit = 1 << k
        for m in range(16):
            if not m & bit:
                entries.append((m | bit, m, _sign_below(m, k)))
    else:
        bit = 1 << (k - 4)
        for m in range(16):
            if m & bit:
                entries.append((m ^ bit, m, _sign_below(m, k - 4)))
    return tuple(entries)


GEN_ENTRIES = tuple(_gen_entries(k) for k in range(8))


def _entries_to_matrix(entries):
    rows = [[0] * 16 for _ in range(16)]
    for r, c, s in entries:
        rows[r][c] = s
    return IntMatrix(rows)


GEN_MATRICES = tuple(_entries_to_matrix(e) for e in GEN_ENTRIES)

# parity operator: (-1)^degree on S; realizes the main involution by conjugation
PARITY = IntMatrix.diagonal([(-1) ** degree(m) for m in range(16)])

V_GRAM = IntMatrix([[0] * 4 + [int(i == j) for j in range(4)] for i in range(4)]
                   + [[int(i == j) for j in range(4)] + [0] * 4 for i in range(4)])


def v_lattice():
    return IntLattice(V_GRAM, label="V")


def v_pairing(v, w):
    gw = V_GRAM.apply(w)
    return sum(a * b for a, b in zip(v, gw))


def act_vector(v, spinor):
    """Apply the Clifford action of v in V (8 coords) to a spinor (16 coords)."""
    out = [0] * 16
    for k, coef in enumerate(v):
        if coef:
            for r, c, s in GEN_ENTRIES[k]:
                out[r] += coef * s * spinor[c]
    return tuple(out)


def clifford_embed(v):
    """The 16x16 matrix of Clifford multiplication by v in V."""
    rows = [[0] * 16 for _ in range(16)]
    for k, coef in enumerate(v):
        if coef:
            for r, c, s in GEN_ENTRIES[k]:
                rows[r][c] += coef * s
    return IntMatrix(rows)


def wedge_matrix(spinor):
    """The 16x16 matrix of left wedge multiplication by a spinor."""
    rows = [[0] * 16 for _ in range(16)]
    for a in range(16):
        if spinor[a] == 0:
            continue
        for b in range(16):
            if a & b:
                continue
            rows[a | b][b] += spinor[a] * merge_sign(a, b)
    return IntMatrix(rows)


def merge_sign(a, b):
    """Sign of sorting the concatenation of disjoint subsets a then b."""
    sign = 1
    for i in range(4):
        if b & (1 << i) and degree(a >> (i + 1)) & 1:
            sign = -sign
    return sign


def tau_degree_sign(d):
    return -1 if (d * (d - 1) // 2) & 1 else 1


def pairing_s(s, t):
    """(s,t)_S: integrate tau(s) wedge t over the surface."""
    total = 0
    for a in range(16):
        if s[a]:
            b = ALL ^ a
            if t[b]:
                total += tau_degree_sign(degree(a)) * s[a] * t[b] * merge_sign(a, b)
    return total


# --- even/odd coordinate systems -------------------------------------------

# S+ ordered (H^0, H^2 in lex pair order, H^4); S- ordered (H^1, H^3 lex)
SPLUS_MASKS = (0, 0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100, 0b1111)
SMINUS_MASKS = (1, 2, 4, 8, 0b0111, 0b1011, 0b1101, 0b1110)
PAIR_ORDER = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def mukai_triple(r, h2, s):
    """S+ 8-vector from (rank, six H^2 coordinates, H^4 coefficient)."""
    return (int(r),) + tuple(int(c) for c in h2) + (int(s),)


def splus_embed(v8):
    out = [0] * 16
    for i, m in enumerate(SPLUS_MASKS):
        out[m] = v8[i]
    return tuple(out)


def sminus_embed(v8):
    out = [0] * 16
    for i, m in enumerate(SMINUS_MASKS):
        out[m] = v8[i]
    return tuple(out)


def splus_coords(spinor):
    assert all(spinor[m] == 0 for m in SMINUS_MASKS), "spinor not even"
    return tuple(spinor[m] for m in SPLUS_MASKS)


def sminus_coords(spinor):
    assert all(spinor[m] == 0 for m in SPLUS_MASKS), "spinor not odd"
    return tuple(spinor[m] for m in SMINUS_MASKS)


def _gram_from_masks(masks):
    g = []
    for a in masks:
        row = []
        for b in masks:
            sa = [0] * 16
            sa[a] = 1
            sb = [0] * 16
            sb[b] = 1
            row.append(pairing_s(sa, sb))
        g.append(row)
    return IntMatrix(g)


SPLUS_GRAM = _gram_from_masks(SPLUS_MASKS)
SMINUS_GRAM = _gram_from_masks(SMINUS_MASKS)


def splus_lattice():
    return IntLattice(SPLUS_GRAM, label="S+")


def sminus_lattice():
    return IntLattice(SMINUS_GRAM, label="S-")


def splus_pairing(x, y):
    gy = SPLUS_GRAM.apply(y)
    return sum(a * b for a, b in zip(x, gy))


def sminus_pairing(x, y):
    gy = SMINUS_GRAM.apply(y)
    return sum(a * b for a, b in zip(x, gy))


# --- monomial basis of C(V) -------------------------------------------------

_MON = None
_REV = None
_MON_SPARSE = None
_DECOMP_ORDER = None


def _tables():
    global _MON, _REV, _MON_SPARSE, _DECOMP_ORDER
    if _MON is not None:
        return
    mon = [None] * 256
    rev = [None] * 256
    mon[0] = IntMatrix.identity(16)
    rev[0] = IntMatrix.identity(16)
    for m in range(1, 256):
        low = (m & -m).bit_length() - 1
        high = m.bit_length() - 1
        mon[m] = GEN_MATRICES[low] @ mon[m ^ (1 << low)]
        rev[m] = GEN_MATRICES[high] @ rev[m ^ (1 << high)]
    _MON = tuple(mon)
    _REV = tuple(rev)
    sparse = []
    for m in range(256):
        entries = []
        for i in range(16):
            row = mon[m].data[i]
            for j in range(16):
                if row[j]:
                    entries.append((i, j, row[j]))
        sparse.append(tuple(entries))
    _MON_SPARSE = tuple(sparse)
    _DECOMP_ORDER = tuple(sorted(range(256),
                                 key=lambda m: degree((m & 15) & (m >> 4))))


def monomial_matrix(mask):
    """Matrix of the monomial: generators of the subset multiplied in
    increasing index order."""
    _tables()
    return _MON[mask]


def monomial_decompose(x):
    """The 256 integer coefficients of x over the monomial basis.

    Exact and unique; the residue after peeling all monomials must vanish
    (C(V) = End(S) is an isomorphism over Z).
    """
    _tables()
    rem = [list(row) for row in x.data]
    coeffs = [0] * 256
    for m in _DECOMP_ORDER:
        a = m & 15
        b = m >> 4
        pivot = _MON[m].data[a][b]
        c = rem[a][b] * pivot  # pivot is +-1
        if c:
            coeffs[m] = c
            for i, j, val in _MON_SPARSE[m]:
                rem[i][j] -= c * val
    assert all(all(v == 0 for v in row) for row in rem), \
        "non-integral monomial decomposition"
    return tuple(coeffs)


def monomial_recompose(coeffs):
    _tables()
    rows = [[0] * 16 for _ in range(16)]
    for m, c in enumerate(coeffs):
        if c:
            for i, j, val in _MON_SPARSE[m]:
                rows[i][j] += c * val
    return IntMatrix(rows)


def monomial_rank():
    """Exact rank of the 256 vectorized monomial matrices.

    Certifies rank 256 by exhibiting a permuted-triangular structure with
    unit diagonal: position (i,j) is assigned to the monomial with wedge
    set i and contraction set j; each monomial has entry +-1 at its own
    position, and its other entries sit at positions whose assigned
    monomial has strictly larger wedge/contraction overlap.  Sorting rows
    and columns by overlap therefore gives a triangular integer matrix
    with unit diagonal, which is unimodular, so the rank is full.
    """
    _tables()
    for m in range(256):
        a, b = m & 15, m >> 4
        own = degree(a & b)
        if _MON[m].data[a][b] not in (1, -1):
            return -1
        for i, j, _val in _MON_SPARSE[m]:
            if (i, j) == (a, b):
                continue
            if degree(i & j) <= own:
                return -1
    return 256


_REV_SPARSE = None


def _rev_sparse():
    global _REV_SPARSE
    if _REV_SPARSE is None:
        _tables()
        sparse = []
        for m in range(256):
            entries = []
            for i in range(16):
                row = _REV[m].data[i]
                for j in range(16):
                    if row[j]:
                        entries.append((i, j, row[j]))
            sparse.append(tuple(entries))
        _REV_SPARSE = tuple(sparse)
    return _REV_SPARSE


def tau(x):
    """Main anti-automorphism: reverses every monomial factor order."""
    rev = _rev_sparse()
    coeffs = monomial_decompose(x)
    rows = [[0] * 16 for _ in range(16)]
    for m, c in enumerate(coeffs):
        if c:
            for i, j, val in rev[m]:
                rows[i][j] += c * val
    return IntMatrix._wrap(tuple(tuple(r) for r in rows))


_PARITY_SIGN = tuple((-1) ** degree(m) for m in range(16))


def alpha(x):
    """Main involution: conjugation by the parity operator."""
    return IntMatrix._wrap(tuple(
        tuple(_PARITY_SIGN[i] * _PARITY_SIGN[j] * x.data[i][j] for j in range(16))
        for i in range(16)))


def star(x):
    """Clifford conjugation, the composite of tau and alpha."""
    return tau(alpha(x))


def parity_of(x):
    """'even', 'odd', or None according to the block structure on S+ / S-."""
    even = True
    odd = True
    for i in range(16):
        pi = degree(i) & 1
        for j in range(16):
            if x.data[i][j]:
                if pi != degree(j) & 1:
                    even = False
                else:
                    odd = False
    if even and not odd:
        return "even"
    if odd and not even:
        return "odd"
    if even and odd:
        return "even"  # zero matrix; immaterial
    return None


def _scalar_of(x):
    """c if x == c*I (c integer or Fraction), else None."""
    c = x.data[0][0]
    for i in range(16):
        for j in range(16):
            if x.data[i][j] != (c if i == j else 0):
                return None
    return c


class NotInCliffordGroup(ValueError):
    """Conjugation by the element does not stabilize V."""


class GroupFlags:
    """Verified membership flags of an invertible Clifford element.

    norm and orientation are +-1 when the respective scalar tests hold and
    None otherwise."""

    __slots__ = ("in_g", "in_pin", "in_spin", "in_g0",
                 "norm", "orientation", "parity", "rho")

    def __init__(self, in_g, in_pin, in_spin, in_g0, norm, orientation, parity, rho):
        self.in_g = in_g
        self.in_pin = in_pin
        self.in_spin = in_spin
        self.in_g0 = in_g0
        self.norm = norm if norm in (1, -1) else None
        self.orientation = orientation if orientation in (1, -1) else None
        self.parity = parity
        self.rho = rho
        assert not in_spin or (in_pin and parity == "even")
        assert not in_pin or in_g


def _mul_gen_right(x, k):
    """x @ GEN_MATRICES[k], exploiting the generator's sparsity."""
    n = x.rows
    cols = [[0] * n for _ in range(16)]
    for r, c, s in GEN_ENTRIES[k]:
        xr = [row[r] for row in x.data]
        col = cols[c]
        if s == 1:
            for i in range(n):
                col[i] += xr[i]
        else:
            for i in range(n):
                col[i] -= xr[i]
    return IntMatrix._wrap(tuple(zip(*cols)))


def group_flags(x):
    """Membership tests for the Clifford group tower and the standard
    representation rho(x): v -> x v x^-1 as an 8x8 integer matrix.

    Raises NotInCliffordGroup if conjugation by x does not stabilize V.
    Tests run over Q (inverse taken rationally when the element is not a
    unit of the integral algebra); integrality of rho is asserted after.
    """
    xs = star(x)
    orientation = _scalar_of(x @ xs)
    norm = _scalar_of(x @ alpha(xs))  # tau(x) = alpha(star(x))
    par = parity_of(x)
    if orientation in (1, -1):
        inv = xs if orientation == 1 else xs.scale(-1)
    elif norm in (1, -1):
        tx = alpha(xs)
        inv = tx if norm == 1 else tx.scale(-1)
    else:
        try:
            inv = x.to_rat().inverse()
        except ValueError:
            raise NotInCliffordGroup("element is not invertible over Q")
        x = x.to_rat()
    rho_cols = []
    for k in range(8):
        y = _mul_gen_right(x, k) if isinstance(inv, IntMatrix) else x @ GEN_MATRICES[k].to_rat()
        y = y @ inv
        w = _extract_vector(y)
        if _embed_entries(w) != _nonzero_entries(y):
            raise NotInCliffordGroup("conjugation does not stabilize V")
        rho_cols.append(w)
    rho_rat = RatMatrix(list(zip(*rho_cols)))
    assert rho_rat.is_integral(), "rho(x) not integral"
    rho = rho_rat.to_int()
    in_g = True
    in_pin = orientation == 1
    in_spin = in_pin and par == "even"
    in_g0 = norm == 1
    return GroupFlags(in_g, in_pin, in_spin, in_g0, norm, orientation, par, rho)


def _extract_vector(y):
    """Read off w with m(w) == y from the characteristic columns."""
    a = [y.data[1 << i][0] for i in range(4)]
    b = []
    for j in range(4):
        sgn = -1 if j & 1 else 1  # (-1)^j from contracting the top class
        b.append(sgn * y.data[ALL ^ (1 << j)][ALL])
    return tuple(a) + tuple(b)


def _embed_entries(w):
    entries = {}
    for k, coef in enumerate(w):
        if coef:
            for r, c, s in GEN_ENTRIES[k]:
                v = entries.get((r, c), 0) + coef * s
                if v:
                    entries[(r, c)] = v
                else:
                    entries.pop((r, c), None)
    return entries


def _nonzero_entries(y):
    entries = {}
    for i in range(16):
        row = y.data[i]
        for j in range(16):
            if row[j]:
                entries[(i, j)] = row[j]
    return entries


def spinor_to_json(s):
    return list(s)


def clifford_to_json(x):
    return [list(row) for row in x.data]
