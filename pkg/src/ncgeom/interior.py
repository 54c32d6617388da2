"""Interior products, Lie derivatives, the bracket map phi, curvature and torsion.

Everything here is built from a braiding on Omega^1 (a :class:`BraidMap`);
the torus table is the default.  Vector fields are tensors over the letters
Du, Dv; a two-fold *unbalanced* tensor of fields (over Q(q), not over the
torus) is a :class:`VecTensor`, which is what phi needs since it does not
descend to the balanced tensor product.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .calculus import collapse_at, d, d0, form_degree, lift_two_form, theta_generators
from .connections import TORUS_SIGMA_TABLE, BraidMap, TorusConnection, ev_at, evaluate, sigma_r_apply
from .scalars import ONE, ScalarQ
from .torus import DU, DV, PU, PV, ZERO_T, Tensor, sum_tensors, tensor

DU_T = Tensor.letter(DU)
DV_T = Tensor.letter(DV)
PU_T = Tensor.letter(PU)
PV_T = Tensor.letter(PV)

IDENTITY_BRAID = BraidMap({(a, b): Tensor.monomial(0, 0, ONE, (a, b)) for a in (DU, DV) for b in (DU, DV)})


def negated(sigma: BraidMap) -> BraidMap:
    return BraidMap({k: -v for k, v in sigma.images.items()})


def T_n_apply(sigma: BraidMap, n: int, z: Tensor) -> Tensor:
    """T_n = -sum_{r=1..n} (-1)^r sigma_r (x) id^(n-r)."""
    if n < 1:
        raise ValueError("T_n needs n >= 1")
    parts = []
    for r in range(1, n + 1):
        term = sigma_r_apply(sigma, r, z)
        parts.append(term if r % 2 else -term)
    return sum_tensors(parts)


def interior_tensor(x: Tensor, z: Tensor, sigma: BraidMap = TORUS_SIGMA_TABLE) -> Tensor:
    """(ev (x) id^(n-1))(X (x) T_n(z)) for z of tensor degree n >= 1."""
    n = z.degree()
    if n is None:
        return ZERO_T
    return ev_at(tensor(x, T_n_apply(sigma, n, z)), 0)


def interior(x: Tensor, omega: Tensor, sigma: BraidMap = TORUS_SIGMA_TABLE, alternate: bool = False) -> Tensor:
    """X interior omega for forms of degree 0, 1, 2 (zero on functions)."""
    deg = form_degree(omega)
    if deg is None or deg == 0:
        return ZERO_T
    if deg == 1:
        return evaluate(x, omega)
    return interior_tensor(x, lift_two_form(omega, alternate), sigma)


# ---------------------------------------------------------------------------
# compatibility
# ---------------------------------------------------------------------------

@dataclass
class CompatibilityResult:
    eigenspace: bool
    t3: bool
    witnesses: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.eigenspace and self.t3


def compatibility_check(sigma: BraidMap) -> CompatibilityResult:
    """(i) T_2 kills Theta^2; (ii) T_3 maps every degree-3 word into Omega^1 (x) Theta^2."""
    witnesses = []
    eig = True
    for k in theta_generators(2):
        img = T_n_apply(sigma, 2, k)
        if not img.is_zero():
            eig = False
            witnesses.append(("T2", k.render(), img.render()))
    t3 = True
    for w in theta_generators(3):
        defect = collapse_at(T_n_apply(sigma, 3, w), 1)
        if not defect.is_zero():
            t3 = False
            witnesses.append(("T3", w.render(), defect.render()))
    return CompatibilityResult(eig, t3, witnesses)


def braid_relation_holds(sigma: BraidMap) -> bool:
    for w in theta_generators(3):
        lhs = sigma(sigma(sigma(w, 0), 1), 0)
        rhs = sigma(sigma(sigma(w, 1), 0), 1)
        if lhs != rhs:
            return False
    return True


def sigma_squared_is_identity(sigma: BraidMap) -> bool:
    return all(sigma(sigma(Tensor.monomial(0, 0, ONE, k))) == Tensor.monomial(0, 0, ONE, k) for k in sigma.images)


# ---------------------------------------------------------------------------
# Lie derivatives
# ---------------------------------------------------------------------------

def directional(x: Tensor, m: Tensor) -> Tensor:
    """D_X(m) = X(dm)."""
    return evaluate(x, d0(m))


def lie_derivative(x: Tensor, omega: Tensor, sigma: BraidMap = TORUS_SIGMA_TABLE, alternate: bool = False) -> Tensor:
    """L_X omega = X interior d(omega) + d(X interior omega)."""
    deg = form_degree(omega)
    if deg is None:
        return ZERO_T
    if deg == 0:
        return directional(x, omega)
    first = interior(x, d(omega), sigma, alternate) if deg == 1 else ZERO_T
    return first + d(interior(x, omega, sigma, alternate))


# ---------------------------------------------------------------------------
# unbalanced field tensors
# ---------------------------------------------------------------------------

def _field_key_terms(x: Tensor):
    for (w, r, s), c in x.terms.items():
        if len(w) != 1 or w[0] not in (PU, PV):
            raise ValueError("expected a vector field")
        yield (w[0], r, s), c


def _field(key: tuple) -> Tensor:
    letter, r, s = key
    return Tensor.monomial(r, s, ONE, (letter,))


class VecTensor:
    """Sum of X (x) Y over Q(q) with X, Y vector fields in right-coefficient form.

    Stored as ``{(x_key, y_key): c}`` with keys ``(letter, r, s)`` meaning
    ``Dletter . v^r u^s``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def pair(cls, x: Tensor, y: Tensor) -> "VecTensor":
        out: dict = {}
        for kx, cx in _field_key_terms(x):
            for ky, cy in _field_key_terms(y):
                k = (kx, ky)
                out[k] = out.get(k, ScalarQ()) + cx * cy
        return cls(out)

    @classmethod
    def from_pairs(cls, pairs) -> "VecTensor":
        out = cls()
        for x, y in pairs:
            out = out + cls.pair(x, y)
        return out

    def pairs(self) -> list[tuple[Tensor, Tensor]]:
        return [(_field(kx).scale(c), _field(ky)) for (kx, ky), c in sorted(self.terms.items())]

    def __add__(self, other: "VecTensor") -> "VecTensor":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ScalarQ()) + c
        return VecTensor(out)

    def __neg__(self) -> "VecTensor":
        return VecTensor({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "VecTensor") -> "VecTensor":
        return self + (-other)

    def scale(self, c) -> "VecTensor":
        c = ScalarQ.coerce(c)
        return VecTensor({k: x * c for k, x in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, VecTensor) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def map_pairs(self, fn) -> "VecTensor":
        return VecTensor.from_pairs(fn(x, y) for x, y in self.pairs())

    def left_mul(self, m: Tensor) -> "VecTensor":
        """m.X (x) Y."""
        return self.map_pairs(lambda x, y: (tensor(m, x), y))

    def right_mul(self, m: Tensor) -> "VecTensor":
        """X (x) Y.m."""
        return self.map_pairs(lambda x, y: (x, tensor(y, m)))

    def inner_left(self, m: Tensor) -> "VecTensor":
        """X.m (x) Y."""
        return self.map_pairs(lambda x, y: (tensor(x, m), y))

    def inner_right(self, m: Tensor) -> "VecTensor":
        """X (x) m.Y."""
        return self.map_pairs(lambda x, y: (x, tensor(m, y)))

    def project(self) -> Tensor:
        """pi: the image in the balanced tensor product over T^2_q."""
        return sum_tensors(tensor(x, y) for x, y in self.pairs())

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({x.render()}) ⊗ ({y.render()})" for x, y in self.pairs())


ANTISYMMETRIC_GENERATOR = VecTensor.pair(PV_T, PU_T) - VecTensor.pair(PU_T, PV_T).scale(ScalarQ((1,), (0, 1)))


def pairing(px: Tensor, k: Tensor) -> Tensor:
    """ev(id (x) ev (x) id)(px (x) k) for px in Vec (x)_M Vec and k of tensor degree 2."""
    return ev_at(ev_at(tensor(px, k), 1), 0)


def antisymmetry_defects(x: VecTensor) -> list[Tensor]:
    """Pairings of pi(x) with the right-module generators of Theta^2.

    The pairing is right linear in k, so vanishing on generators is enough.
    """
    px = x.project()
    return [pairing(px, k) for k in theta_generators(2)]


def antisymmetry_check(x: VecTensor) -> bool:
    return all(t.is_zero() for t in antisymmetry_defects(x))


class NotAntisymmetric(ValueError):
    pass


def phi_apply(x: VecTensor, xi: Tensor, alternate: bool = False) -> Tensor:
    """phi(x)(xi) = sum D_X(Y(xi)) + pairing(X (x) Y, z) with wedge(z) = d xi."""
    z = lift_two_form(d(xi), alternate)
    parts = []
    for a, b in x.pairs():
        parts.append(directional(a, evaluate(b, xi)))
        if not z.is_zero():
            parts.append(pairing(tensor(a, b), z))
    return sum_tensors(parts)


def phi(x: VecTensor, check: bool = True) -> Tensor:
    """The vector field phi(x) = phi(x)(du) Du + phi(x)(dv) Dv."""
    if check and not antisymmetry_check(x):
        raise NotAntisymmetric("phi needs an antisymmetric tensor")
    return tensor(phi_apply(x, DU_T), PU_T) + tensor(phi_apply(x, DV_T), PV_T)


def curvature(conn: TorusConnection, x: VecTensor, e: Tensor, check: bool = True) -> Tensor:
    """R(x)(e) = sum nabla_X nabla_Y e - nabla_phi(x) e, for e a one-form or a field."""
    parts = [conn.covariant(a, conn.covariant(b, e)) for a, b in x.pairs()]
    parts.append(-conn.covariant(phi(x, check), e))
    return sum_tensors(parts)


def torsion(conn: TorusConnection, x: VecTensor, check: bool = True) -> Tensor:
    """T(x) = sum nabla_X Y - phi(x)."""
    parts = [conn.covariant(a, b) for a, b in x.pairs()]
    parts.append(-phi(x, check))
    return sum_tensors(parts)
