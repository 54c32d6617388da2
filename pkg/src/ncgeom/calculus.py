"""Differential forms on T^2_q: d, wedge, the kernels Theta^n and lifts.

The calculus is the one generated by du, dv with

    du^dv = -q dv^du,  u dv = q dv u,  v du = q^-1 du v,
    [u, du] = [v, dv] = 0,  du^du = dv^dv = 0.

Omega^2 is free of rank one on W = du^dv and Omega^3 = 0.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ONE, ScalarQ, qpow
from .torus import (
    DU,
    DV,
    FORM_LETTERS,
    W,
    ZERO_T,
    Tensor,
    apply_local,
    sum_tensors,
    tensor,
)

DU_T = Tensor.letter(DU)
DV_T = Tensor.letter(DV)
W_T = Tensor.letter(W)

_COLLAPSE = {
    (DU, DU): ZERO_T,
    (DV, DV): ZERO_T,
    (DU, DV): W_T,
    (DV, DU): W_T.scale(-qpow(-1)),
}


def is_form(z: Tensor, degree: int | None = None) -> bool:
    for w in z.words():
        if degree is not None and _form_degree(w) != degree:
            return False
        if _form_degree(w) is None:
            return False
    return True


def _form_degree(word: tuple) -> int | None:
    if word == (W,):
        return 2
    if all(x in FORM_LETTERS for x in word):
        return len(word)
    return None


def form_degree(z: Tensor) -> int | None:
    """Degree of a homogeneous form (0, 1 or 2); None for zero."""
    degs = {_form_degree(w) for w in z.words()}
    if not degs:
        return None
    if len(degs) != 1 or None in degs:
        raise ValueError(f"not a homogeneous form: {z.render()}")
    return degs.pop()


def d0(m: Tensor) -> Tensor:
    """d(v^r u^s) = r dv.v^(r-1) u^s + s q^-r du.v^r u^(s-1), extended linearly."""
    out = {}
    for (w, r, s), c in m.terms.items():
        if w:
            raise ValueError("d0 expects a torus element")
        if r:
            k = ((DV,), r - 1, s)
            out[k] = out.get(k, ScalarQ()) + c * r
        if s:
            k = ((DU,), r, s - 1)
            out[k] = out.get(k, ScalarQ()) + (c * s).mul_qpow(-r)
    return Tensor(out)


def wedge_collapse(z: Tensor) -> Tensor:
    """Omega^1 (x) Omega^1 -> Omega^2."""
    return apply_local(z, 0, 2, _COLLAPSE.get)


def collapse_at(z: Tensor, pos: int) -> Tensor:
    """(id^pos (x) wedge (x) id) on a tensor of one-forms."""
    return apply_local(z, pos, 2, _COLLAPSE.get)


def wedge(a: Tensor, b: Tensor) -> Tensor:
    """Wedge product of homogeneous forms of degree <= 2."""
    da, db = form_degree(a), form_degree(b)
    if da is None or db is None:
        return ZERO_T
    if da == 0 or db == 0:
        return tensor(a, b)
    if da + db > 2:
        return ZERO_T
    return wedge_collapse(tensor(a, b))


def d1(omega: Tensor) -> Tensor:
    """d(du.a) = -du^d(a), d(dv.a) = -dv^d(a)."""
    parts = []
    for (w, r, s), c in omega.terms.items():
        if len(w) != 1 or w[0] not in FORM_LETTERS:
            raise ValueError("d1 expects a one-form")
        da = d0(Tensor.monomial(r, s, c))
        parts.append(-wedge_collapse(tensor(Tensor.letter(w[0]), da)))
    return sum_tensors(parts)


def d(z: Tensor) -> Tensor:
    """The exterior derivative on Omega^0, Omega^1 and Omega^2."""
    deg = form_degree(z)
    if deg is None:
        return ZERO_T
    if deg == 0:
        return d0(z)
    if deg == 1:
        return d1(z)
    return ZERO_T


def lift_two_form(w: Tensor, alternate: bool = False) -> Tensor:
    """A preimage under wedge: (du^dv).a -> du(x)dv.a (or -q dv(x)du.a)."""
    word, factor = ((DV, DU), -qpow(1)) if alternate else ((DU, DV), ONE)
    out = {}
    for (x, r, s), c in w.terms.items():
        if x != (W,):
            raise ValueError("lift_two_form expects a two-form")
        out[(word, r, s)] = c * factor
    return Tensor(out, _clean=True)


def theta_generators(n: int) -> list[Tensor]:
    """Right-module generators of Theta^n = ker(wedge) for n = 2, 3."""
    if n == 2:
        return [
            Tensor.monomial(0, 0, ONE, (DU, DU)),
            Tensor.monomial(0, 0, ONE, (DV, DV)),
            Tensor.monomial(0, 0, ONE, (DU, DV)) + Tensor.monomial(0, 0, qpow(1), (DV, DU)),
        ]
    if n == 3:
        # Omega^3 = 0, so the kernel is the whole triple tensor power
        return [
            Tensor.monomial(0, 0, ONE, (a, b, c))
            for a in (DU, DV) for b in (DU, DV) for c in (DU, DV)
        ]
    raise ValueError(f"theta_generators is defined for n = 2, 3, not {n}")


def in_omega_theta2(z: Tensor) -> bool:
    """Membership of a degree-3 tensor in Omega^1 (x) Theta^2.

    Omega^1 is free, so the kernel of id (x) wedge is exactly Omega^1 (x) Theta^2.
    """
    return collapse_at(z, 1).is_zero()


def binomial(s: int, k: int) -> Fraction:
    """s(s-1)...(s-k+1)/k! for any integer s."""
    num = 1
    den = 1
    for i in range(k):
        num *= s - i
        den *= i + 1
    return Fraction(num, den)
