"""Constant-coefficient analysis of the braiding family on the quantum sphere.

Words are ordered (dz dz, dz dzb, dzb dz, dzb dzb), index 2*i + j with
i, j in {0: dz, 1: dzb}.  Matrices act on column vectors: column c is the
image of basis word c.  With H = sum h_ij1 dz^i (x) dz^j,

    sigma(dz dz)   = dz dz,                sigma(dzb dzb) = dzb dzb,
    sigma(dz dzb)  = q^-2 dzb dz + (q^2-1) H,
    sigma(dzb dz)  = q^2 dz dzb - q^2 (q^2-1) H.

The calculus has dz^dzb = -q^-2 dzb^dz and dz^dz = dzb^dzb = 0, so wedge
sends the four words to (0, 1, -q^2, 0) times dz^dzb, and there is no
degree-3 form.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields

from . import linalg
from .scalars import ONE, ZERO, ScalarQ, qpow

Q2 = qpow(2)
QM2 = qpow(-2)
Q4 = qpow(4)

WORDS = ("dz⊗dz", "dz⊗dz̄", "dz̄⊗dz", "dz̄⊗dz̄")
VEC_IN_WORDS = ("∂_z⊗dz", "∂_z⊗dz̄", "∂_z̄⊗dz", "∂_z̄⊗dz̄")
VEC_OUT_WORDS = ("dz⊗∂_z", "dz⊗∂_z̄", "dz̄⊗∂_z", "dz̄⊗∂_z̄")

COLLAPSE_ROW = [[ZERO, ONE, -Q2, ZERO]]

# special values appearing in the case tables
H121_SPECIAL = (Q2 - 1).inverse()
H211_SPECIAL = (Q2 - Q4).inverse()


@dataclass(frozen=True)
class SphereParams:
    h111: ScalarQ = ZERO
    h121: ScalarQ = ZERO
    h211: ScalarQ = ZERO
    h221: ScalarQ = ZERO

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, ScalarQ.coerce(getattr(self, f.name)))

    @property
    def x(self) -> ScalarQ:
        """x = (q^2 - 1)(h121 - q^2 h211) - 1."""
        return (Q2 - 1) * (self.h121 - Q2 * self.h211) - 1

    def vector(self) -> list:
        return [self.h111, self.h121, self.h211, self.h221]


def _unit(i: int) -> list:
    v = [ZERO] * 4
    v[i] = ONE
    return v


def _set_column(m: list, c: int, col: list):
    for r in range(4):
        m[r][c] = col[r]


def sphere_sigma(h: SphereParams) -> list:
    """The 4x4 braiding matrix."""
    H = h.vector()
    k = Q2 - 1
    m = linalg.zeros(4)
    _set_column(m, 0, _unit(0))
    _set_column(m, 3, _unit(3))
    _set_column(m, 1, [QM2 * (i == 2) + k * H[i] for i in range(4)])
    # the displayed line is sigma(q^-2 dzb dz); rescale by q^2
    _set_column(m, 2, [Q2 * ((i == 1) - k * H[i]) for i in range(4)])
    return m


def sphere_theta2() -> list:
    """Generators of ker(wedge) in degree 2, as coefficient vectors."""
    return [_unit(0), _unit(3), [ZERO, ONE, QM2, ZERO]]


def collapse(vec: list) -> ScalarQ:
    return linalg.matvec(COLLAPSE_ROW, vec)[0]


def _id(n: int) -> list:
    return linalg.identity(n)


def sigma_left(s: list) -> list:
    """sigma (x) id on the 8 degree-3 words."""
    return linalg.kron(s, _id(2))


def sigma_right(s: list) -> list:
    """id (x) sigma on the 8 degree-3 words."""
    return linalg.kron(_id(2), s)


def t2(s: list) -> list:
    return linalg.sub(_id(4), s)


def t3(s: list) -> list:
    """T_3 = id - sigma (x) id + sigma_3 with sigma_3 = (sigma (x) id)(id (x) sigma)."""
    sl = sigma_left(s)
    s3 = linalg.matmul(sl, sigma_right(s))
    out = linalg.sub(_id(8), sl)
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(out, s3)]


@dataclass
class SphereCompat:
    eigenspace: bool
    t3: bool
    t3_defect: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.eigenspace and self.t3


def sphere_compat(h: SphereParams) -> SphereCompat:
    """Theta^2 in ker(id - sigma), and (id (x) wedge) T_3 = 0 on all 8 words."""
    s = sphere_sigma(h)
    eig = all(linalg.is_zero([linalg.matvec(t2(s), k)]) for k in sphere_theta2())
    defect = linalg.matmul(linalg.kron(_id(2), COLLAPSE_ROW), t3(s))
    return SphereCompat(eig, linalg.is_zero(defect), defect)


def braid_relation_check(h: SphereParams) -> bool:
    s = sphere_sigma(h)
    a, b = sigma_left(s), sigma_right(s)
    return linalg.equal(linalg.matmul(linalg.matmul(a, b), a), linalg.matmul(linalg.matmul(b, a), b))


@dataclass
class SquareReport:
    invertible: bool
    determinant: ScalarQ
    square_is_identity: bool


def sigma_square_and_invertibility(h: SphereParams) -> SquareReport:
    s = sphere_sigma(h)
    det = linalg.determinant(s)
    return SquareReport(bool(det), det, linalg.equal(linalg.matmul(s, s), _id(4)))


def sphere_vec_sigma(h: SphereParams) -> list:
    """Braiding Vec (x) Omega^1 -> Omega^1 (x) Vec preserving evaluation.

    sigma(D_a (x) e_b) = sum_(k,i) sigma^-1[(a,k),(b,i)] e_k (x) D_i, so the
    matrix entry [(k,i)][(a,b)] is sigma^-1[2a+k][2b+i].
    """
    s_inv = linalg.inverse(sphere_sigma(h))
    m = linalg.zeros(4)
    for a in range(2):
        for b in range(2):
            for k in range(2):
                for i in range(2):
                    m[2 * k + i][2 * a + b] = s_inv[2 * a + k][2 * b + i]
    return m


def displayed_vec_sigma(h: SphereParams) -> list:
    """The closed-form Vec braiding with denominators x, in the same bases."""
    x = h.x
    q2, q4 = Q2, Q4
    m = linalg.zeros(4)
    cols = [
        # D_z (x) dz
        [ONE, h.h111 * (1 - q2) / x, ZERO, h.h211 * (q2 - q4) / x],
        # D_z (x) dzb
        [h.h111 * (q4 - q2) / x, ZERO, (h.h121 * (q4 - q2) - q2) / x, ZERO],
        # D_zb (x) dz
        [ZERO, (h.h211 * (1 - q2) - QM2) / x, ZERO, h.h221 * (1 - q2) / x],
        # D_zb (x) dzb
        [h.h121 * (q2 - 1) / x, ZERO, h.h221 * (q4 - q2) / x, ONE],
    ]
    for c, col in enumerate(cols):
        _set_column(m, c, col)
    return m


def sphere_dim(h: SphereParams) -> ScalarQ:
    """ev(sigma_Vec^-1 delta) with delta = dz (x) D_z + dzb (x) D_zb."""
    v = sphere_vec_sigma(h)
    delta = [ONE, ZERO, ZERO, ONE]
    hat = linalg.matvec(linalg.inverse(v), delta)
    return hat[0] + hat[3]


def displayed_dim(h: SphereParams) -> ScalarQ:
    x = h.x
    return x * (x - 1) / (x * x + Q2 * (Q2 - 1) * (Q2 - 1) * (h.h121 * h.h211 - h.h111 * h.h221))


# ---------------------------------------------------------------------------
# the stated case tables
# ---------------------------------------------------------------------------

def _special(h: SphereParams) -> bool:
    return not h.h111 and not h.h221 and h.h121 == H121_SPECIAL and h.h211 == H211_SPECIAL


COMPAT_CASES = {
    "a": lambda h: not h.h221 and not h.h211 and h.h121 == H121_SPECIAL,
    "b": lambda h: not h.h111 and not h.h121 and h.h211 == H211_SPECIAL,
    "c": lambda h: not h.h111 and not h.h221 and not (h.h211 * h.h121),
    "d": _special,
}

BRAID_CASES = {
    "a": lambda h: not h.h111 and not h.h221 and not (h.h211 * h.h121),
    "b": _special,
}

SQUARE_CASES = {
    "a": lambda h: not (h.h121 - h.h211 * Q2),
    "b": _special,
}


def stated_cases(table: dict, h: SphereParams) -> list[str]:
    return [name for name, pred in table.items() if pred(h)]


CASE_VALUES = {
    "a": SphereParams(h111=ScalarQ((3,)), h121=H121_SPECIAL),
    "b": SphereParams(h211=H211_SPECIAL, h221=ScalarQ((2,))),
    "c": SphereParams(h121=ScalarQ((1, 1))),
    "d": SphereParams(h121=H121_SPECIAL, h211=H211_SPECIAL),
}
