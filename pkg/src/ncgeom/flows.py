"""Truncated power series in a central time t, and flows built from them.

* ``exp_lie``: the exponential series of L_X for a time-independent field X,
  c_(k+1) = L_X(c_k) / (k+1)
* ``closed_form_series``: Taylor coefficients of the known closed forms for
  X = Du and X = u.Du on the torus
* ``cochain_check`` / ``homotopy_check``: d K = K d and dK/dt = d h + h d
  with h = K o (X interior)
* ``parallel_transport`` / ``geodesic``: order-by-order solutions of
  dc/dt = -nabla_X c and dc/dt = -nabla_c c

Only time-independent fields are exponentiated.  A polynomial-in-t field
would replace L_X by sum_j t^j L_(X_j) in the recursion.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .calculus import binomial, d, form_degree
from .connections import TORUS_SIGMA_TABLE, BraidMap, TorusConnection
from .interior import interior, lie_derivative
from .scalars import ScalarQ
from .torus import DU, DV, PU, W, ZERO_T, Tensor, U, sum_tensors, tensor

DEFAULT_ORDER = 8

KIND_DU = "Du"
KIND_U_DU = "uDu"
KINDS = (KIND_DU, KIND_U_DU)


class FormalSeries:
    """c_0 + c_1 t + ... + c_N t^N with Tensor coefficients (t is central)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Tensor]):
        if not coeffs:
            raise ValueError("a series needs at least the constant term")
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "FormalSeries":
        return cls([ZERO_T] * (order + 1))

    def __getitem__(self, k: int) -> Tensor:
        return self.coeffs[k]

    def _check(self, other: "FormalSeries"):
        if other.order != self.order:
            raise ValueError("series orders differ")

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        self._check(other)
        return FormalSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "FormalSeries":
        return FormalSeries([-a for a in self.coeffs])

    def __sub__(self, other: "FormalSeries") -> "FormalSeries":
        return self + (-other)

    def scale(self, c) -> "FormalSeries":
        return FormalSeries([a.scale(c) for a in self.coeffs])

    def map(self, fn: Callable[[Tensor], Tensor]) -> "FormalSeries":
        """Apply a t-independent linear map coefficientwise."""
        return FormalSeries([fn(a) for a in self.coeffs])

    def derivative(self) -> "FormalSeries":
        """d/dt, one order shorter."""
        if self.order == 0:
            return FormalSeries([ZERO_T])
        return FormalSeries([self.coeffs[k + 1].scale(k + 1) for k in range(self.order)])

    def truncate(self, order: int) -> "FormalSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return FormalSeries(self.coeffs[:order + 1])

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalSeries) and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def render(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            text = c.render()
            if k == 0:
                parts.append(text)
            elif k == 1:
                parts.append(f"t·({text})")
            else:
                parts.append(f"t^{k}·({text})")
        return " + ".join(parts) if parts else "0"

    __str__ = render


def exp_lie(x: Tensor, omega: Tensor, order: int = DEFAULT_ORDER, sigma: BraidMap = TORUS_SIGMA_TABLE) -> FormalSeries:
    """exp(t L_X) omega truncated at t^order."""
    coeffs = [omega]
    for k in range(order):
        coeffs.append(lie_derivative(x, coeffs[-1], sigma).scale(Fraction(1, k + 1)))
    return FormalSeries(coeffs)


def field_of_kind(kind: str) -> Tensor:
    if kind == KIND_DU:
        return Tensor.letter(PU)
    if kind == KIND_U_DU:
        return tensor(U, Tensor.letter(PU))
    raise ValueError(f"unknown field kind {kind!r}; expected one of {KINDS}")


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def _rate(degree: int, letter: int | None, r: int, s: int) -> int:
    """Eigenvalue of L_(u.Du) on the basis monomial."""
    if degree == 0:
        return s
    if degree == 2 or letter == DU:
        return s + 1
    return s


def _monomial_series(kind: str, degree: int, word: tuple, r: int, s: int, c: ScalarQ, order: int) -> list[Tensor]:
    base = Tensor.monomial(r, s, c, word)
    letter = word[0] if degree == 1 else None
    # (1 + t u^-1)^e acts from the left; e is the u-exponent of the monomial
    out = []
    for k in range(order + 1):
        if kind == KIND_DU:
            coeff = binomial(s, k)
            term = tensor(Tensor.monomial(0, -k, coeff), base) if coeff else ZERO_T
        else:
            rate = _rate(degree, letter, r, s)
            term = base.scale(Fraction(rate ** k, factorial(k)))
        out.append(term)
    return out


def closed_form_series(kind: str, omega: Tensor, order: int = DEFAULT_ORDER) -> FormalSeries:
    """Taylor coefficients of the closed-form exponential, extended linearly.

    Du:   v^r u^s -> (1 + t u^-1)^s . v^r u^s on every degree (s the u-exponent
          of the coefficient of du, dv or du^dv)
    u.Du: v^r u^s -> e^(st) v^r u^s,  du.v^r u^s -> e^((s+1)t) du.v^r u^s,
          dv.v^n u^m -> e^(mt) dv.v^n u^m,  du^dv.v^r u^s -> e^((s+1)t) du^dv.v^r u^s
    """
    if kind not in KINDS:
        raise ValueError(f"unknown field kind {kind!r}; expected one of {KINDS}")
    degree = form_degree(omega)
    if degree is None:
        return FormalSeries.zero(order)
    acc = [[] for _ in range(order + 1)]
    for (w, r, s), c in omega.terms.items():
        for k, term in enumerate(_monomial_series(kind, degree, w, r, s, c, order)):
            acc[k].append(term)
    return FormalSeries([sum_tensors(a) for a in acc])


def closed_form_monomial(kind: str, degree: int, data: tuple, order: int = DEFAULT_ORDER) -> FormalSeries:
    """Closed form for a basis monomial.

    ``data`` is (r, s) for degrees 0 and 2 and (r, s, n, m) for degree 1,
    meaning du.v^r u^s + dv.v^n u^m.
    """
    if degree == 0:
        r, s = data
        omega = Tensor.monomial(r, s)
    elif degree == 1:
        r, s, n, m = data
        omega = Tensor.monomial(r, s, 1, (DU,)) + Tensor.monomial(n, m, 1, (DV,))
    elif degree == 2:
        r, s = data
        omega = Tensor.monomial(r, s, 1, (W,))
    else:
        raise ValueError("degree must be 0, 1 or 2")
    return closed_form_series(kind, omega, order)


# ---------------------------------------------------------------------------
# cochain identities
# ---------------------------------------------------------------------------

def cochain_check(x: Tensor, omega: Tensor, order: int = DEFAULT_ORDER, sigma: BraidMap = TORUS_SIGMA_TABLE) -> bool:
    """d K(t) omega = K(t) d omega through t^order."""
    lhs = exp_lie(x, omega, order, sigma).map(d)
    rhs = exp_lie(x, d(omega), order, sigma)
    return lhs == rhs


def homotopy_sides(x: Tensor, omega: Tensor, order: int = DEFAULT_ORDER, sigma: BraidMap = TORUS_SIGMA_TABLE):
    """(dK/dt omega, (d h + h d) omega) through t^(order-1), with h = K o (X interior)."""
    kdot = exp_lie(x, omega, order, sigma).derivative()
    dh = exp_lie(x, interior(x, omega, sigma), order, sigma).map(d)
    hd = exp_lie(x, interior(x, d(omega), sigma), order, sigma)
    return kdot, (dh + hd).truncate(order - 1)


def homotopy_check(x: Tensor, omega: Tensor, order: int = DEFAULT_ORDER, sigma: BraidMap = TORUS_SIGMA_TABLE) -> bool:
    kdot, rhs = homotopy_sides(x, omega, order, sigma)
    return kdot == rhs


# ---------------------------------------------------------------------------
# transport
# ---------------------------------------------------------------------------

def parallel_transport(conn: TorusConnection, x: Tensor, c0: Tensor, order: int = DEFAULT_ORDER) -> FormalSeries:
    """c_(k+1) = -nabla_X(c_k) / (k+1)."""
    coeffs = [c0]
    for k in range(order):
        coeffs.append(-conn.covariant(x, coeffs[-1]).scale(Fraction(1, k + 1)))
    return FormalSeries(coeffs)


def geodesic(conn: TorusConnection, c0: Tensor, order: int = DEFAULT_ORDER) -> FormalSeries:
    """(k+1) c_(k+1) = -sum_(i+j=k) nabla_(c_i) c_j for a field c."""
    coeffs = [c0]
    for k in range(order):
        acc = sum_tensors(conn.covariant(coeffs[i], coeffs[k - i]) for i in range(k + 1))
        coeffs.append(-acc.scale(Fraction(1, k + 1)))
    return FormalSeries(coeffs)


def transport_residual(conn: TorusConnection, x: Tensor, series: FormalSeries) -> FormalSeries:
    """dc/dt + nabla_X c through t^(N-1)."""
    return series.derivative() + series.truncate(series.order - 1).map(lambda c: conn.covariant(x, c))


def geodesic_residual(conn: TorusConnection, series: FormalSeries) -> FormalSeries:
    """dc/dt + nabla_c c through t^(N-1), with the Cauchy product in t."""
    n = series.order
    quad = []
    for k in range(n):
        quad.append(sum_tensors(conn.covariant(series[i], series[k - i]) for i in range(k + 1)))
    return series.derivative() + FormalSeries(quad)
