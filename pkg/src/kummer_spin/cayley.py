"""Chern-character calculus on the product of the surface with its dual,
and the invariant degree-four class of the stabilizer.

The graded ring is the exterior algebra over Q on eight odd generators
(four from each factor); classes of K-theory objects are recorded by rank
plus total Chern character.  The distinguished degree-four class is
matched against the second Chern class of the endomorphism bundle of the
transform of a dual ideal-sheaf class, and its invariance is certified by
exact kernel computations on the 70-dimensional fourth wedge power of the
rank-8 module.
"""

from fractions import Fraction
from itertools import combinations

from .exact import IntMatrix, RatMatrix, rational_kernel

NGEN = 8


def degree(mask):
    return bin(mask).count("1")


def _merge_sign(a, b):
    """Sign of sorting the concatenation of disjoint generator subsets."""
    sign = 1
    for i in range(NGEN):
        if b & (1 << i) and degree(a >> (i + 1)) & 1:
            sign = -sign
    return sign


class ExtRingElement:
    """Element of the exterior algebra on e1..e4, f1..f4 over Q, stored as
    a sparse mask -> coefficient mapping."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for m, c in coeffs.items():
                c = Fraction(c)
                if c:
                    self.coeffs[m] = c

    @classmethod
    def scalar(cls, c):
        return cls({0: Fraction(c)})

    @classmethod
    def generator(cls, i):
        return cls({1 << i: Fraction(1)})

    def __add__(self, other):
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            v = out.get(m, Fraction(0)) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return ExtRingElement(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        if not isinstance(other, ExtRingElement):
            return self.scale(other)
        out = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                if a & b:
                    continue
                m = a | b
                v = out.get(m, Fraction(0)) + ca * cb * _merge_sign(a, b)
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return ExtRingElement(out)

    __rmul__ = __mul__

    def scale(self, k):
        return ExtRingElement({m: c * Fraction(k) for m, c in self.coeffs.items()})

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        return isinstance(other, ExtRingElement) and self.coeffs == other.coeffs

    def graded_part(self, d):
        return ExtRingElement({m: c for m, c in self.coeffs.items()
                               if degree(m) == d})

    def is_zero(self):
        return not self.coeffs

    def dual(self):
        """Sign-alternating class: (-1)^k on degree 2k (odd parts negated
        degree-halved convention is irrelevant: only even classes occur)."""
        out = {}
        for m, c in self.coeffs.items():
            d = degree(m)
            assert d % 2 == 0, "dual of an odd class is not used here"
            out[m] = c if (d // 2) % 2 == 0 else -c
        return ExtRingElement(out)

    def exp(self):
        """Exponential of a nilpotent even element of degree >= 2."""
        assert all(degree(m) >= 2 and degree(m) % 2 == 0
                   for m in self.coeffs), "exp needs even positive degree"
        total = ExtRingElement.scalar(1)
        power = ExtRingElement.scalar(1)
        k = 1
        while True:
            power = power * self
            if power.is_zero():
                break
            total = total + power.scale(Fraction(1, _factorial(k)))
            k += 1
        return total

    def __repr__(self):
        return "ExtRingElement(%r)" % (self.coeffs,)


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


E = tuple(ExtRingElement.generator(i) for i in range(4))
F = tuple(ExtRingElement.generator(4 + i) for i in range(4))

# the three distinguished degree-four building blocks
ALPHA = sum((E[i] * F[i] for i in range(4)), ExtRingElement())
BETA = E[0] * E[1] * E[2] * E[3]          # point class of the first factor
GAMMA = F[0] * F[1] * F[2] * F[3]         # point class of the second factor
C1_P = ALPHA                               # first Chern class of the kernel


class ChClass:
    """A K-theory class seen through (rank, total Chern character)."""

    __slots__ = ("rank", "ch")

    def __init__(self, rank, ch):
        self.rank = int(rank)
        self.ch = ch
        assert ch.graded_part(0) == ExtRingElement.scalar(rank), \
            "degree-zero part must equal the rank"

    def __add__(self, other):
        return ChClass(self.rank + other.rank, self.ch + other.ch)

    def __sub__(self, other):
        return ChClass(self.rank - other.rank, self.ch - other.ch)

    def scale(self, k):
        return ChClass(self.rank * k, self.ch.scale(k))

    def __neg__(self):
        return self.scale(-1)

    def tensor(self, other):
        return ChClass(self.rank * other.rank, self.ch * other.ch)

    def dual(self):
        return ChClass(self.rank, self.ch.dual())

    def c1(self):
        return self.ch.graded_part(2)


def fm_class(n):
    """The K-class of the transform of the dual ideal-sheaf class:
    -n [O] + [fiber class of the second factor] - n [kernel bundle]
    + n^2 [fiber class of the first factor]."""
    if n < 1:
        raise ValueError("n must be at least 1")
    structure = ChClass(1, ExtRingElement.scalar(1))
    poincare = ChClass(1, C1_P.exp())
    pt1 = ChClass(0, BETA)
    pt2 = ChClass(0, GAMMA)
    return structure.scale(-n) + pt2 - poincare.scale(n) + pt1.scale(n * n)


def kappa2(b):
    """Degree-four part of ch(b) exp(-c1(b)/rank)."""
    if b.rank == 0:
        raise ValueError("kappa needs nonzero rank")
    twist = b.c1().scale(Fraction(-1, b.rank)).exp()
    return (b.ch * twist).graded_part(4)


def c2_end(b):
    """Second Chern class of the endomorphism class of b: minus the
    degree-four Chern character of b tensor b-dual (the first Chern class
    of the endomorphism class vanishes)."""
    if b.rank == 0:
        raise ValueError("c2 of endomorphisms needs nonzero rank")
    end = b.tensor(b.dual())
    assert end.c1().is_zero()
    return -end.ch.graded_part(4)


def c2_end_via_kappa(b):
    """The same class through the kappa route: -2 rank kappa2(b)."""
    return kappa2(b).scale(-2 * b.rank)


# --- the invariant class in the fourth wedge power ---------------------------

WEDGE4_SUBSETS = tuple(combinations(range(8), 4))
WEDGE4_INDEX = {s: i for i, s in enumerate(WEDGE4_SUBSETS)}


def ext_to_wedge4(elt):
    """Coordinates of a degree-four element over the 70 sorted subsets."""
    out = [Fraction(0)] * 70
    for m, c in elt.coeffs.items():
        assert degree(m) == 4
        subset = tuple(i for i in range(8) if m & (1 << i))
        out[WEDGE4_INDEX[subset]] = c
    return tuple(out)


def cayley_class(big_n):
    """-N^2 alpha^2 + 4 N^3 beta + 4 N gamma as a 70-coordinate vector,
    N = half the negated square of the stabilized class."""
    if big_n < 2:
        raise ValueError("parameter must be at least 2")
    elt = (ALPHA * ALPHA).scale(-big_n * big_n) \
        + BETA.scale(4 * big_n ** 3) + GAMMA.scale(4 * big_n)
    return ext_to_wedge4(elt)


def _det4(r0, r1, r2, r3):
    """4x4 determinant by two-row Laplace expansion."""
    a01 = r0[0] * r1[1] - r0[1] * r1[0]
    a02 = r0[0] * r1[2] - r0[2] * r1[0]
    a03 = r0[0] * r1[3] - r0[3] * r1[0]
    a12 = r0[1] * r1[2] - r0[2] * r1[1]
    a13 = r0[1] * r1[3] - r0[3] * r1[1]
    a23 = r0[2] * r1[3] - r0[3] * r1[2]
    b01 = r2[0] * r3[1] - r2[1] * r3[0]
    b02 = r2[0] * r3[2] - r2[2] * r3[0]
    b03 = r2[0] * r3[3] - r2[3] * r3[0]
    b12 = r2[1] * r3[2] - r2[2] * r3[1]
    b13 = r2[1] * r3[3] - r2[3] * r3[1]
    b23 = r2[2] * r3[3] - r2[3] * r3[2]
    return a01 * b23 - a02 * b13 + a03 * b12 + a12 * b03 - a13 * b02 + a23 * b01


def wedge4_matrix(m8):
    """The induced 70x70 integer matrix of an 8x8 matrix on the fourth
    wedge power (4x4 minors)."""
    rows = []
    for rws in WEDGE4_SUBSETS:
        picked = [m8.data[i] for i in rws]
        row = []
        for cols in WEDGE4_SUBSETS:
            subrows = [tuple(p[j] for j in cols) for p in picked]
            row.append(_det4(*subrows))
        rows.append(row)
    return IntMatrix(rows)


def invariant_rank(v_actions, expect_contains=None):
    """Exact rank and basis of the joint fixed space of the fourth wedge
    powers of the given 8x8 actions.

    Returns (rank, basis) with basis a list of 70-coordinate tuples.  The
    kernel is intersected incrementally: the first action cuts the full
    space by ker(wedge4(g) - id) directly; each later action cuts the
    current basis."""
    basis = None
    for m8 in v_actions:
        if basis is not None and not basis:
            break
        w4 = wedge4_matrix(m8)
        if basis is None:
            basis = rational_kernel(w4 - IntMatrix.identity(70))
            continue
        cols = []
        for b in basis:
            img = w4.apply(b)
            cols.append(tuple(x - y for x, y in zip(img, b)))
        # kernel of the 70 x len(basis) map expressed in the current basis
        constraint = RatMatrix(list(zip(*cols)))
        inner = rational_kernel(constraint)
        basis = [
            tuple(sum(c * b[i] for c, b in zip(vec, basis)) for i in range(70))
            for vec in inner
        ]
    if basis is None:
        basis = [tuple(Fraction(int(i == j)) for i in range(70)) for j in range(70)]
    if expect_contains is not None:
        assert _in_span(expect_contains, basis), \
            "expected class missing from the fixed space"
    return len(basis), basis


def _in_span(vec, basis):
    if not basis:
        return all(x == 0 for x in vec)
    rows = [list(b) for b in basis] + [list(Fraction(x) for x in vec)]
    m = RatMatrix(rows)
    return m.rank() == len(basis)


def proportional(u, v):
    """Whether two vectors are nonzero rational multiples of each other."""
    m = RatMatrix([list(u), list(v)])
    return m.rank() == 1 and any(u) and any(v)
