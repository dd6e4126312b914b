"""The 24-dimensional commutative algebra on V + S- + S+ and its symmetries.

Blocks of a 24-vector: indices 0..7 = V, 8..15 = S-, 16..23 = S+.
The product multiplies V against the spinor halves by Clifford action and
pairs S+ against S- into V through the V-pairing; squares of a single
summand vanish.  The order-3 automorphism permuting the summands is built
from a fixed +2 class in S+ and a fixed unit vector in V.
"""

from .clifford import (
    SMINUS_GRAM,
    SPLUS_GRAM,
    V_GRAM,
    act_vector,
    clifford_embed,
    group_flags,
    mukai_triple,
    pairing_s,
    sminus_coords,
    sminus_embed,
    splus_coords,
    splus_embed,
    splus_pairing,
    SPLUS_MASKS,
    SMINUS_MASKS,
)
from .exact import IntMatrix, RatMatrix

_S_PERM = SMINUS_MASKS + SPLUS_MASKS  # A_X spinor coordinate order: S- then S+

AX_GRAM = IntMatrix([
    [V_GRAM[i, j] if i < 8 and j < 8 else
     SMINUS_GRAM[i - 8, j - 8] if 8 <= i < 16 and 8 <= j < 16 else
     SPLUS_GRAM[i - 16, j - 16] if i >= 16 and j >= 16 else 0
     for j in range(24)]
    for i in range(24)])


def ax_element(v=None, s_minus=None, s_plus=None):
    """Assemble a 24-vector from its three 8-dimensional blocks."""
    v = tuple(v) if v is not None else (0,) * 8
    s_minus = tuple(s_minus) if s_minus is not None else (0,) * 8
    s_plus = tuple(s_plus) if s_plus is not None else (0,) * 8
    assert len(v) == len(s_minus) == len(s_plus) == 8
    return v + s_minus + s_plus


def v_block(a):
    return a[0:8]

def sminus_block(a):
    return a[8:16]

def splus_block(a):
    return a[16:24]


def _splus_times_sminus(sp, sm):
    """The V-component of the product of an S+ and an S- element.

    Defined by (result, x)_V = (x . sp, sm)_S for all x in V; for the
    hyperbolic V-Gram the inverse pairing swaps the two 4-blocks.
    """
    sp16 = splus_embed(sp)
    sm16 = sminus_embed(sm)
    phi = []
    for k in range(8):
        basis = tuple(int(i == k) for i in range(8))
        phi.append(pairing_s(act_vector(basis, sp16), sm16))
    # v = G^-1 phi with G = [[0,I],[I,0]]: swap halves
    return tuple(phi[4:8]) + tuple(phi[0:4])


def ax_product(a, b):
    """The commutative product on V + S- + S+."""
    av, am, ap = v_block(a), sminus_block(a), splus_block(a)
    bv, bm, bp = v_block(b), sminus_block(b), splus_block(b)
    # V x S+ -> S-  and  V x S- -> S+ (Clifford action)
    s16 = act_vector(av, splus_embed(bp))
    t16 = act_vector(bv, splus_embed(ap))
    minus = tuple(x + y for x, y in zip(sminus_coords(s16), sminus_coords(t16)))
    s16 = act_vector(av, sminus_embed(bm))
    t16 = act_vector(bv, sminus_embed(am))
    plus = tuple(x + y for x, y in zip(splus_coords(s16), splus_coords(t16)))
    # S+ x S- -> V
    vec = tuple(x + y for x, y in zip(_splus_times_sminus(ap, bm),
                                      _splus_times_sminus(bp, am)))
    return ax_element(vec, minus, plus)


def multiplication_operator(a):
    """24x24 matrix of multiplication by the element a in the algebra."""
    cols = []
    for j in range(24):
        basis = tuple(int(i == j) for i in range(24))
        cols.append(ax_product(a, basis))
    return IntMatrix(list(zip(*cols)))


class AXAutomorphism:
    """A linear automorphism of the 24-dimensional algebra with verified
    structural flags."""

    __slots__ = ("matrix", "_flags")

    def __init__(self, matrix):
        if not isinstance(matrix, (IntMatrix, RatMatrix)):
            matrix = RatMatrix(matrix)
        if matrix.rows != 24 or matrix.cols != 24:
            raise ValueError("expected a 24x24 matrix")
        self.matrix = matrix
        self._flags = {}

    def __matmul__(self, other):
        a, b = self.matrix, other.matrix
        if isinstance(a, IntMatrix) != isinstance(b, IntMatrix):
            a = a.to_rat() if isinstance(a, IntMatrix) else a
            b = b.to_rat() if isinstance(b, IntMatrix) else b
        return AXAutomorphism(a @ b)

    def __eq__(self, other):
        a, b = self.matrix, other.matrix
        if isinstance(a, IntMatrix) != isinstance(b, IntMatrix):
            a = a.to_rat() if isinstance(a, IntMatrix) else a
            b = b.to_rat() if isinstance(b, IntMatrix) else b
        return a == b

    def apply(self, a):
        return self.matrix.apply(a)

    def inverse(self):
        inv = self.matrix.to_rat().inverse() if isinstance(self.matrix, IntMatrix) \
            else self.matrix.inverse()
        if inv.is_integral():
            inv = inv.to_int()
        return AXAutomorphism(inv)

    def is_isometry(self):
        if "isometry" not in self._flags:
            m = self.matrix
            g = AX_GRAM if isinstance(m, IntMatrix) else AX_GRAM.to_rat()
            self._flags["isometry"] = m.transpose() @ g @ m == g
        return self._flags["isometry"]

    def is_algebra_automorphism(self):
        """Exhaustive check of f(a.b) = f(a).f(b) on all 24x24 basis pairs."""
        if "algebra" not in self._flags:
            images = [self.apply(tuple(int(i == j) for i in range(24)))
                      for j in range(24)]
            ok = True
            for i in range(24):
                ei = tuple(int(k == i) for k in range(24))
                for j in range(i, 24):
                    ej = tuple(int(k == j) for k in range(24))
                    left = self.apply(ax_product(ei, ej))
                    right = ax_product(images[i], images[j])
                    if tuple(left) != tuple(right):
                        ok = False
                        break
                if not ok:
                    break
            self._flags["algebra"] = ok
        return self._flags["algebra"]

    def product_twist(self):
        """+1 for a full algebra automorphism; -1 when the product is
        preserved except for a sign on the V x S- -> S+ component (the
        component defined through the pairing on V + S-, which scales by
        the even-half norm of sign-reversing elements); None otherwise."""
        images = [self.apply(tuple(int(i == j) for i in range(24)))
                  for j in range(24)]
        twist = None
        for i in range(24):
            ei = tuple(int(k == i) for k in range(24))
            for j in range(i, 24):
                ej = tuple(int(k == j) for k in range(24))
                left = tuple(self.apply(ax_product(ei, ej)))
                right = tuple(ax_product(images[i], images[j]))
                if not any(left) and not any(right):
                    continue
                if left == right:
                    eps = 1
                elif left == tuple(-x for x in right):
                    eps = -1
                else:
                    return None
                if {i // 8, j // 8} == {0, 1}:
                    if twist is None:
                        twist = eps
                    elif twist != eps:
                        return None
                elif eps != 1:
                    return None
        return 1 if twist is None else twist

    def block_permutation(self):
        """Which summand each of V, S-, S+ maps into, or None if mixing."""
        names = ("V", "S-", "S+")
        spans = ((0, 8), (8, 16), (16, 24))
        out = []
        for lo, hi in spans:
            targets = set()
            for j in range(lo, hi):
                col = self.matrix.column(j)
                for i in range(24):
                    if col[i]:
                        targets.add(i // 8)
            if len(targets) != 1:
                return None
            out.append(names[targets.pop()])
        return dict(zip(names, out))

    def to_json(self):
        mat = self.matrix.to_rat() if isinstance(self.matrix, IntMatrix) else self.matrix
        return {
            "matrix": [[str(x) for x in row] for row in mat.data],
            "isometry": self.is_isometry(),
            "algebra_automorphism": self.is_algebra_automorphism(),
            "block_permutation": self.block_permutation(),
        }


def mu_tilde(x, flags=None):
    """The action of an even-norm-kernel Clifford element on the algebra:
    conjugation on V, module action on the spinor halves."""
    if flags is None:
        flags = group_flags(x)
    if flags.norm != 1:
        raise ValueError("element is not in the kernel of the norm character")
    rows = [[0] * 24 for _ in range(24)]
    for i in range(8):
        for j in range(8):
            rows[i][j] = flags.rho[i, j]
    for i in range(16):
        for j in range(16):
            rows[8 + i][8 + j] = x[_S_PERM[i], _S_PERM[j]]
    return AXAutomorphism(IntMatrix(rows))


def _splus_reflection(y):
    """Reflection matrix R_y on the S+ block, for (y,y)_{S+} = +-2."""
    yy = splus_pairing(y, y)
    if yy not in (2, -2):
        raise ValueError("S+ reflection needs square +-2, got %s" % (yy,))
    cols = []
    for j in range(8):
        e = tuple(int(i == j) for i in range(8))
        coef = 2 * splus_pairing(e, y) // yy
        cols.append(tuple(e[i] - coef * y[i] for i in range(8)))
    return IntMatrix(list(zip(*cols)))


def m_tilde(y):
    """The Pin-type element of a square +-2 class y in S+: multiplication
    by y on V + S-, minus the reflection in y on S+."""
    y = tuple(y)
    mult = multiplication_operator(ax_element(s_plus=y))
    refl = _splus_reflection(y)
    rows = [list(row) for row in mult.data]
    for i in range(8):
        for j in range(8):
            rows[16 + i][16 + j] = -refl[i, j]
    return AXAutomorphism(IntMatrix(rows))


def m_tilde_pair(y1, y2):
    """m_tilde(y1) . m_tilde(y2): multiplication composition on V + S-,
    product of the two reflections on S+.

    Equal-sign squares give an isometry of the algebra (the Spin case);
    mixed signs reverse the sign of the pairing on V + S-.
    """
    s1 = splus_pairing(y1, y1)
    s2 = splus_pairing(y2, y2)
    if s1 not in (2, -2) or s2 not in (2, -2):
        raise ValueError("pair classes must have square +-2")
    return m_tilde(tuple(y1)) @ m_tilde(tuple(y2))


def minus_one():
    """mu-tilde of -1: identity on V, -1 on the spinor halves."""
    rows = [[0] * 24 for _ in range(24)]
    for i in range(8):
        rows[i][i] = 1
        rows[8 + i][8 + i] = -1
        rows[16 + i][16 + i] = -1
    return AXAutomorphism(IntMatrix(rows))


def alpha_tilde_element():
    """The central Spin element acting as the parity operator on spinors:
    the product over i of (1 - 2 e_i e_i*)."""
    x = IntMatrix.identity(16)
    for i in range(4):
        wedge = clifford_embed(tuple(int(k == i) for k in range(8)))
        contract = clifford_embed(tuple(int(k == i + 4) for k in range(8)))
        x = x @ (IntMatrix.identity(16) - (wedge @ contract).scale(2))
    return x


def tau_tilde():
    """The involution -alpha~ . m~_{s1 s2} with s1 = (1,0,-1), s2 = (1,0,1);
    acts on both spinor halves by the grading signs of the main
    anti-automorphism, and nontrivially on V."""
    s1 = mukai_triple(1, [0] * 6, -1)
    s2 = mukai_triple(1, [0] * 6, 1)
    minus_alpha = alpha_tilde_element().scale(-1)
    return mu_tilde(minus_alpha) @ m_tilde_pair(s1, s2)


def build_j():
    """The order-3 algebra automorphism with J(V) = S+, J(S+) = S-,
    J(S-) = V, from the +2 class u1 = (1,0,1) and the unit vector
    x1 = e1 + e1*.

    The intermediate map is exactly m_tilde(u1): Clifford action on u1
    from V to S-, product by u1 from S- to V, minus the reflection on S+.
    """
    t = m_tilde(mukai_triple(1, [0] * 6, 1))
    x1 = (1, 0, 0, 0, 1, 0, 0, 0)
    mu_x1 = mu_tilde(clifford_embed(x1))
    return AXAutomorphism(mu_x1.matrix @ t.matrix)


def outer_j(x, j=None):
    """The outer triality twist on a Spin element, realized by conjugating
    its algebra action with the order-3 automorphism.

    The direction is fixed so that the twist of -1 is the central element
    acting as the identity on S+ and by -1 on V + S- (the grading
    involution goes to the twist of -id); with J(V) = S+ this is
    J mu(g) J^-1.  The conjugate must again lie in the Spin image: it has
    to preserve all three summands and the product; violations are
    internal errors."""
    if j is None:
        j = build_j()
    flags = group_flags(x)
    if not flags.in_spin:
        raise ValueError("outer triality twist needs a Spin element")
    conj = j @ mu_tilde(x, flags) @ j.inverse()
    perm = conj.block_permutation()
    assert perm == {"V": "V", "S-": "S-", "S+": "S+"}, \
        "triality conjugate does not preserve the summands"
    assert conj.is_algebra_automorphism(), \
        "triality conjugate is not an algebra automorphism"
    return conj
