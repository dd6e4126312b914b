"""Integer lattices with symmetric bilinear forms.

Reflections in square +-2 vectors, the determinant / discriminant-sign /
orientation characters of their isometries, and discriminant groups
computed from Smith normal form of the Gram matrix.
"""

from fractions import Fraction

from .exact import IntMatrix, RatMatrix, integer_kernel, smith_normal_form


class IntLattice:
    """A free Z-module of finite rank with a symmetric Gram matrix."""

    def __init__(self, gram, label=""):
        if not isinstance(gram, IntMatrix):
            gram = IntMatrix(gram)
        if not gram.is_symmetric():
            raise ValueError("Gram matrix must be symmetric")
        self.rank = gram.rows
        self.gram = gram
        self.label = label
        self._positive_basis = None

    def pairing(self, x, y):
        x = _coords(x, self.rank)
        y = _coords(y, self.rank)
        gy = self.gram.apply(y)
        return sum(a * b for a, b in zip(x, gy))

    def square(self, x):
        return self.pairing(x, x)

    def is_even(self):
        return all(self.gram[i, i] % 2 == 0 for i in range(self.rank))

    def vector(self, coords):
        return LatticeVector(self, coords)

    def to_json(self):
        return {"label": self.label, "gram": [list(r) for r in self.gram.data]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["gram"], obj.get("label", ""))

    @classmethod
    def hyperbolic(cls, copies=1, label="U"):
        n = 2 * copies
        g = [[0] * n for _ in range(n)]
        for k in range(copies):
            g[2 * k][2 * k + 1] = 1
            g[2 * k + 1][2 * k] = 1
        return cls(g, label)

    def positive_basis(self):
        """A fixed rational basis of a maximal positive-definite subspace.

        Computed once per lattice by Gram diagonalization over Q, so that
        the orientation character is deterministic.
        """
        if self._positive_basis is None:
            diag_basis = _diagonalize(self.gram)
            pos = [v for v in diag_basis if _square_q(self.gram, v) > 0]
            self._positive_basis = tuple(pos)
        return self._positive_basis

    def __repr__(self):
        return "IntLattice(rank=%d, label=%r)" % (self.rank, self.label)


class LatticeVector:
    """Integer coordinate vector attached to its lattice."""

    __slots__ = ("lattice", "coords")

    def __init__(self, lattice, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != lattice.rank:
            raise ValueError("coordinate length != lattice rank")
        self.lattice = lattice
        self.coords = coords

    def square(self):
        return self.lattice.square(self.coords)

    def __eq__(self, other):
        return (isinstance(other, LatticeVector)
                and self.lattice is other.lattice
                and self.coords == other.coords)

    def __hash__(self):
        return hash((id(self.lattice), self.coords))

    def __repr__(self):
        return "LatticeVector(%r)" % (self.coords,)

    def to_json(self):
        return list(self.coords)


class LatticeIsometry:
    """An integer matrix M with M^T G M == G for the lattice's Gram G."""

    __slots__ = ("lattice", "matrix")

    def __init__(self, lattice, matrix):
        if not isinstance(matrix, IntMatrix):
            matrix = IntMatrix(matrix)
        if matrix.transpose() @ lattice.gram @ matrix != lattice.gram:
            raise ValueError("matrix does not preserve the bilinear form")
        self.lattice = lattice
        self.matrix = matrix

    def __matmul__(self, other):
        if other.lattice is not self.lattice:
            raise ValueError("isometries of different lattices")
        return LatticeIsometry(self.lattice, self.matrix @ other.matrix)

    def __eq__(self, other):
        return isinstance(other, LatticeIsometry) and self.matrix == other.matrix

    def apply(self, vec):
        return self.matrix.apply(_coords(vec, self.lattice.rank))

    def det(self):
        return self.matrix.det()

    def inverse(self):
        inv = self.matrix.to_rat().inverse()
        assert inv.is_integral()
        return LatticeIsometry(self.lattice, inv.to_int())


def _coords(x, rank):
    if isinstance(x, LatticeVector):
        x = x.coords
    x = tuple(x)
    if len(x) != rank:
        raise ValueError("coordinate length != lattice rank")
    return x


def _square_q(gram, v):
    gv = gram.to_rat().apply(v)
    return sum(a * b for a, b in zip(v, gv))


def _pair_q(gram, u, v):
    gv = gram.to_rat().apply(v)
    return sum(a * b for a, b in zip(u, gv))


def _diagonalize(gram):
    """Rational basis vectors on which the form is diagonal and nonzero
    (for a nondegenerate form), via symmetric Gram-Schmidt over Q."""
    n = gram.rows
    basis = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    out = []
    while basis:
        v = None
        for cand in basis:
            if _square_q(gram, cand) != 0:
                v = cand
                break
        if v is None:
            # all isotropic: some pair must pair nontrivially
            found = False
            for i in range(len(basis)):
                for j in range(i + 1, len(basis)):
                    if _pair_q(gram, basis[i], basis[j]) != 0:
                        v = tuple(a + b for a, b in zip(basis[i], basis[j]))
                        found = True
                        break
                if found:
                    break
            if v is None:
                break  # degenerate remainder
        out.append(v)
        qv = _square_q(gram, v)
        new_basis = []
        for b in basis:
            coef = _pair_q(gram, b, v) / qv
            nb = tuple(x - coef * y for x, y in zip(b, v))
            if any(x != 0 for x in nb):
                new_basis.append(nb)
        # drop one dependent vector: project and re-extract independent set
        basis = _independent(new_basis)
    return out


def _independent(vectors):
    """A basis of the span of the given vectors (row-reduced)."""
    if not vectors:
        return []
    reduced, _ = RatMatrix(vectors).rref()
    return [tuple(r) for r in reduced.data if any(x != 0 for x in r)]


def reflection(lattice, u):
    """R_u(x) = x - 2 (x,u)/(u,u) u, for (u,u) = +-2 on an even lattice."""
    u = _coords(u, lattice.rank)
    uu = lattice.square(u)
    if uu not in (2, -2):
        raise ValueError("reflection needs (u,u) = +-2, got %d" % uu)
    if not lattice.is_even():
        raise ValueError("reflection formula requires an even lattice")
    n = lattice.rank
    cols = []
    for j in range(n):
        e = tuple(int(i == j) for i in range(n))
        xu = lattice.pairing(e, u)
        # 2 (e,u)/(u,u) = +- (e,u)
        coef = 2 * xu // uu
        cols.append(tuple(e[i] - coef * u[i] for i in range(n)))
    mat = IntMatrix(list(zip(*cols)))
    return LatticeIsometry(lattice, mat)


def signed_reflection(lattice, u):
    """r_u = ((u,u)/-2) R_u; the reflection itself for -2 vectors,
    minus the reflection for +2 vectors."""
    u = _coords(u, lattice.rank)
    uu = lattice.square(u)
    r = reflection(lattice, u)
    return LatticeIsometry(lattice, r.matrix.scale(uu // -2))


def det_character(g):
    d = g.det()
    assert d in (1, -1)
    return d


class DiscriminantGroup:
    """L*/L for a nondegenerate lattice, with generator lifts in L* ⊗ Q."""

    __slots__ = ("lattice", "factors", "lifts", "order")

    def __init__(self, lattice, factors, lifts):
        self.lattice = lattice
        self.factors = tuple(factors)
        self.lifts = tuple(lifts)
        self.order = 1
        for f in self.factors:
            self.order *= f

    def is_trivial(self):
        return self.order == 1


def discriminant_group(lattice):
    """Invariant factors and generator lifts of L*/L from SNF of the Gram."""
    det = lattice.gram.det()
    if det == 0:
        raise ValueError("degenerate Gram matrix")
    snf = smith_normal_form(lattice.gram)
    gram_inv = lattice.gram.to_rat().inverse()
    left_inv = snf.left.to_rat().inverse()
    factors = []
    lifts = []
    for k, f in enumerate(snf.invariant_factors):
        if f > 1:
            factors.append(f)
            e = tuple(Fraction(int(i == k)) for i in range(lattice.rank))
            lift = gram_inv.apply(left_inv.apply(e))
            lifts.append(tuple(lift))
    group = DiscriminantGroup(lattice, factors, lifts)
    assert group.order == abs(det)
    return group


def chi_character(lattice, g, disc=None):
    """The sign by which the isometry g acts on L*/L.

    Raises if the action is not multiplication by +-1 (the character is
    only defined on the relevant reflection group).
    """
    if disc is None:
        disc = discriminant_group(lattice)
    if disc.is_trivial():
        return 1
    m = g.matrix.to_rat()
    for eps in (1, -1):
        ok = True
        for lift in disc.lifts:
            image = m.apply(lift)
            if any((a - eps * b).denominator != 1 for a, b in zip(image, lift)):
                ok = False
                break
        if ok:
            return eps
    raise ValueError("isometry does not act by +-1 on the discriminant group")


def ort_character(lattice, g, positive_basis=None):
    """Orientation character: sign of det of (project to P) o g restricted
    to a maximal positive-definite subspace P.  Independent of the choice
    of P's basis."""
    if positive_basis is None:
        basis = lattice.positive_basis()
    else:
        basis = [tuple(Fraction(x) for x in v) for v in positive_basis]
        gp = RatMatrix([[_pair_q(lattice.gram, u, v) for v in basis] for u in basis])
        for k in range(1, len(basis) + 1):
            if RatMatrix([row[:k] for row in gp.data[:k]]).det() <= 0:
                raise ValueError("positive_basis is not positive definite")
    if not basis:
        return 1
    m = g.matrix.to_rat()
    gramp = RatMatrix([[_pair_q(lattice.gram, u, v) for v in basis] for u in basis])
    gramp_inv = gramp.inverse()
    cols = []
    for v in basis:
        gv = m.apply(v)
        rhs = [_pair_q(lattice.gram, u, gv) for u in basis]
        cols.append(gramp_inv.apply(rhs))
    t = RatMatrix(list(zip(*cols)))
    d = t.det()
    if d == 0:
        raise ValueError("degenerate projection; not an isometry?")
    return 1 if d > 0 else -1


def orthogonal_complement_basis(lattice, vectors):
    """Integral basis of the sublattice orthogonal to the given vectors."""
    rows = [lattice.gram.apply(_coords(v, lattice.rank)) for v in vectors]
    return integer_kernel(IntMatrix(rows))


def sublattice(lattice, basis_vectors, label=""):
    """The lattice on the given independent vectors with restricted form."""
    g = [[lattice.pairing(u, v) for v in basis_vectors] for u in basis_vectors]
    return IntLattice(g, label)
