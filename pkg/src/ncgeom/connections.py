"""Bimodule connections on Omega^1 T^2_q and everything derived from them.

A :class:`TorusConnection` is fixed by eight scalars (the images of du and
dv under nabla).  From those alone it derives

* the braiding sigma on Omega^1 (x) Omega^1, via
  sigma(e (x) a db) = nabla(e.ab) - nabla(e.a).b with the *left* Leibniz
  extension of nabla,
* the dual connection and braiding on vector fields (dual basis
  du, dv / Du, Dv),
* sigma^-1 on Vec (x) Vec, the Kronecker delta and dim T^2_q,
* nabla on arbitrary tensor words in Omega^1 and Vec, and on Omega^2.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from functools import cached_property
from typing import Callable, Mapping

from . import linalg
from .calculus import collapse_at, d0, lift_two_form, theta_generators
from .scalars import ONE, ZERO, ScalarQ
from .torus import (
    DU,
    DV,
    FIELD_LETTERS,
    FORM_LETTERS,
    PU,
    PV,
    U,
    U_INV,
    V,
    V_INV,
    W,
    ZERO_T,
    Tensor,
    apply_local,
    sum_tensors,
    tensor,
)

FORM_PAIRS = [(a, b) for a in (DU, DV) for b in (DU, DV)]
FIELD_FORM_PAIRS = [(a, b) for a in (PU, PV) for b in (DU, DV)]
FORM_FIELD_PAIRS = [(a, b) for a in (DU, DV) for b in (PU, PV)]
FIELD_PAIRS = [(a, b) for a in (PU, PV) for b in (PU, PV)]

_DUAL = {DU: PU, DV: PV}


class WellDefinednessError(ArithmeticError):
    """A derived map failed a bimodule or kernel-preservation check."""


@dataclass(frozen=True)
class ConnectionParams:
    r_uu: ScalarQ = ZERO
    r_vu: ScalarQ = ZERO
    r_uv: ScalarQ = ZERO
    r_vv: ScalarQ = ZERO
    s_vv: ScalarQ = ZERO
    s_vu: ScalarQ = ZERO
    s_uv: ScalarQ = ZERO
    s_uu: ScalarQ = ZERO

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, ScalarQ.coerce(getattr(self, f.name)))

    @classmethod
    def names(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def as_dict(self) -> dict[str, ScalarQ]:
        return {name: getattr(self, name) for name in self.names()}


# ---------------------------------------------------------------------------
# local maps
# ---------------------------------------------------------------------------

def _ev_image(chunk: tuple) -> Tensor:
    x, y = chunk
    if x not in FIELD_LETTERS or y not in FORM_LETTERS:
        raise ValueError(f"evaluation needs a field followed by a form, got {chunk}")
    return Tensor.scalar(ONE) if _DUAL[y] == x else ZERO_T


def ev_at(z: Tensor, pos: int = 0) -> Tensor:
    """(id^pos (x) ev (x) id) for ev: Vec (x) Omega^1 -> T^2_q."""
    return apply_local(z, pos, 2, _ev_image)


def evaluate(x: Tensor, omega: Tensor) -> Tensor:
    """X(omega) for a vector field X and a one-form omega."""
    return ev_at(tensor(x, omega), 0)


class BraidMap:
    """A bimodule map on two-letter words, given by its basis images."""

    def __init__(self, images: Mapping[tuple, Tensor]):
        self.images = dict(images)

    def __call__(self, z: Tensor, pos: int = 0) -> Tensor:
        return apply_local(z, pos, 2, self.images.get)

    def image(self, a: int, b: int) -> Tensor:
        return self.images[(a, b)]

    def is_constant(self) -> bool:
        return all(t.is_constant() for t in self.images.values())

    def matrix(self, basis_in: list, basis_out: list) -> list:
        """Columns are images of ``basis_in`` in the ``basis_out`` words."""
        if not self.is_constant():
            raise ValueError("braid map has non-constant coefficients")
        index = {w: i for i, w in enumerate(basis_out)}
        m = linalg.zeros(len(basis_out), len(basis_in))
        for j, w in enumerate(basis_in):
            for (iw, _, _), c in self.images[w].terms.items():
                m[index[iw]][j] = c
        return m

    @classmethod
    def from_matrix(cls, m: list, basis_in: list, basis_out: list) -> "BraidMap":
        images = {}
        for j, w in enumerate(basis_in):
            images[w] = Tensor({(basis_out[i], 0, 0): m[i][j] for i in range(len(basis_out))})
        return cls(images)

    def inverse(self, basis_in: list, basis_out: list) -> "BraidMap":
        """Inverse map, from ``basis_out`` words back to ``basis_in`` words."""
        m = self.matrix(basis_in, basis_out)
        try:
            inv = linalg.inverse(m)
        except ZeroDivisionError as exc:
            raise ZeroDivisionError("braiding is singular") from exc
        return BraidMap.from_matrix(inv, basis_out, basis_in)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BraidMap):
            return NotImplemented
        keys = set(self.images) | set(other.images)
        return all(self.images.get(k, ZERO_T) == other.images.get(k, ZERO_T) for k in keys)

    def render(self) -> str:
        from .render import render_word

        return "; ".join(f"σ({render_word(k)}) = {self.images[k].render()}" for k in sorted(self.images))


TORUS_SIGMA_TABLE = BraidMap({
    (DU, DU): Tensor.monomial(0, 0, ONE, (DU, DU)),
    (DV, DV): Tensor.monomial(0, 0, ONE, (DV, DV)),
    (DU, DV): Tensor.monomial(0, 0, ScalarQ((0, 1)), (DV, DU)),
    (DV, DU): Tensor.monomial(0, 0, ScalarQ((1,), (0, 1)), (DU, DV)),
})


def sigma_r_apply(sigma: BraidMap, r: int, z: Tensor, offset: int = 0) -> Tensor:
    """sigma_r = (sigma (x) id)(id (x) sigma_(r-1)) on slots offset .. offset+r-1."""
    if r < 1:
        raise ValueError("sigma_r needs r >= 1")
    for j in range(r - 2, -1, -1):
        z = sigma(z, offset + j)
    return z


# ---------------------------------------------------------------------------
# the connection
# ---------------------------------------------------------------------------

def nabla_generator(p: ConnectionParams, g: int) -> Tensor:
    """nabla(du) or nabla(dv) for the eight-parameter family."""
    def term(c, word, coeff):
        return tensor(Tensor.monomial(0, 0, c, word), coeff)

    if g == DU:
        return sum_tensors([
            term(p.r_uu, (DU, DU), U_INV),
            term(p.r_vu, (DV, DU), V_INV),
            term(p.r_uv, (DU, DV), V_INV),
            term(p.r_vv, (DV, DV), U * V_INV * V_INV),
        ])
    if g == DV:
        return sum_tensors([
            term(p.s_vv, (DV, DV), V_INV),
            term(p.s_vu, (DV, DU), U_INV),
            term(p.s_uv, (DU, DV), U_INV),
            term(p.s_uu, (DU, DU), V * U_INV * U_INV),
        ])
    raise ValueError("generator must be du or dv")


class TorusConnection:
    """(nabla, sigma) on Omega^1 T^2_q with all derived structure cached."""

    def __init__(self, params: ConnectionParams | None = None):
        self.params = params if params is not None else ConnectionParams()
        self.generators = {DU: nabla_generator(self.params, DU), DV: nabla_generator(self.params, DV)}

    # -- nabla on one-forms -------------------------------------------------
    def nabla_left(self, omega: Tensor) -> Tensor:
        """nabla via the left Leibniz rule nabla(m.xi) = dm (x) xi + m.nabla(xi)."""
        parts = []
        for (w, r, s), c in omega.terms.items():
            if len(w) != 1 or w[0] not in FORM_LETTERS:
                raise ValueError("nabla_left expects a one-form")
            xi = w[0]
            m = Tensor({(w, r, s): c}, _clean=True).left_coefficient(w)
            parts.append(tensor(d0(m), Tensor.letter(xi)))
            parts.append(tensor(m, self.generators[xi]))
        return sum_tensors(parts)

    @cached_property
    def sigma(self) -> BraidMap:
        """sigma(xi (x) dg) = nabla(xi.g) - nabla(xi).g for g = u, v."""
        images = {}
        for xi in (DU, DV):
            e = Tensor.letter(xi)
            for g, gen in ((DU, U), (DV, V)):
                images[(xi, g)] = self.nabla_left(tensor(e, gen)) - tensor(self.nabla_left(e), gen)
        return BraidMap(images)

    def sigma_formula(self, e: Tensor, a: Tensor, b: Tensor) -> Tensor:
        """nabla(e.ab) - nabla(e.a).b, the defining expression for sigma(e (x) a db)."""
        return self.nabla_left(tensor(e, tensor(a, b))) - tensor(self.nabla_left(tensor(e, a)), b)

    @cached_property
    def sigma_inv(self) -> BraidMap:
        return self.sigma.inverse(FORM_PAIRS, FORM_PAIRS)

    # -- vector fields --------------------------------------------------------
    @cached_property
    def sigma_vec(self) -> BraidMap:
        """Vec (x) Omega^1 -> Omega^1 (x) Vec, preserving evaluation."""
        images = {}
        for alpha, xi in FIELD_FORM_PAIRS:
            parts = []
            for e in (DU, DV):
                z = Tensor.monomial(0, 0, ONE, (alpha, xi, e))
                z = ev_at(self.sigma_inv(z, 1), 0)
                parts.append(tensor(z, Tensor.letter(_DUAL[e])))
            images[(alpha, xi)] = sum_tensors(parts)
        return BraidMap(images)

    @cached_property
    def sigma_vec_inv(self) -> BraidMap:
        return self.sigma_vec.inverse(FIELD_FORM_PAIRS, FORM_FIELD_PAIRS)

    @cached_property
    def sigma_inv_vecvec(self) -> BraidMap:
        """sigma^-1 on Vec (x) Vec (the inverse is not claimed to exist)."""
        images = {}
        for x, y in FIELD_PAIRS:
            parts = []
            for e in (DU, DV):
                z = Tensor.monomial(0, 0, ONE, (x, y, e))
                z = ev_at(self.sigma_vec(z, 1), 0)
                parts.append(tensor(z, Tensor.letter(_DUAL[e])))
            images[(x, y)] = sum_tensors(parts)
        return BraidMap(images)

    def nabla_vec(self, alpha: Tensor) -> Tensor:
        """Dual connection from the dual-basis formula.

        nabla(alpha) = sum_i d(alpha(e_i)) (x) D_i
                       - sum_i (ev (x) id)(id (x) sigma^-1)(alpha (x) nabla e_i) (x) D_i
        """
        parts = []
        for e in (DU, DV):
            dual = Tensor.letter(_DUAL[e])
            parts.append(tensor(d0(evaluate(alpha, Tensor.letter(e))), dual))
            z = ev_at(self.sigma_inv(tensor(alpha, self.generators[e]), 1), 0)
            parts.append(-tensor(z, dual))
        return sum_tensors(parts)

    @cached_property
    def vec_generators(self) -> dict:
        return {PU: self.nabla_vec(Tensor.letter(PU)), PV: self.nabla_vec(Tensor.letter(PV))}

    # -- nabla on tensor words ------------------------------------------------
    def _cross(self, chunk: tuple) -> Tensor | None:
        if chunk[0] in FORM_LETTERS:
            return self.sigma.images.get(chunk)
        return self.sigma_vec.images.get(chunk)

    def move_to_front(self, z: Tensor, slot: int) -> Tensor:
        """Braid the one-form in ``slot`` leftwards to slot 0."""
        for j in range(slot - 1, -1, -1):
            z = apply_local(z, j, 2, self._cross)
        return z

    @cached_property
    def _letter_nabla(self) -> dict:
        out = dict(self.generators)
        out.update(self.vec_generators)
        return out

    def _nabla_word(self, word: tuple) -> Tensor:
        parts = []
        for i, x in enumerate(word):
            prefix = Tensor.monomial(0, 0, ONE, word[:i])
            suffix = Tensor.monomial(0, 0, ONE, word[i + 1:])
            z = tensor(tensor(prefix, self._letter_nabla[x]), suffix)
            parts.append(self.move_to_front(z, i))
        return sum_tensors(parts)

    def nabla(self, z: Tensor) -> Tensor:
        """Covariant derivative on words in du, dv, Du, Dv (tensor-product rule).

        For one-forms this is right Leibniz: nabla(xi.c) = nabla(xi).c + sigma(xi (x) dc).
        """
        parts = []
        for w in z.words():
            if W in w:
                raise ValueError("use nabla_two_form for two-forms")
            c = z.coefficient(w)
            base = Tensor.monomial(0, 0, ONE, w)
            if w:
                parts.append(tensor(self._nabla_word(w), c))
            parts.append(self.move_to_front(tensor(base, d0(c)), len(w)))
        return sum_tensors(parts)

    def nabla_one_form(self, omega: Tensor) -> Tensor:
        return self.nabla(omega)

    def covariant(self, x: Tensor, e: Tensor) -> Tensor:
        """nabla_X e = (ev (x) id)(X (x) nabla e)."""
        return ev_at(tensor(x, self.nabla(e)), 0)

    # -- Omega^2 ---------------------------------------------------------------
    def theta2_preservation_defects(self) -> list[Tensor]:
        """(id (x) wedge) nabla(k) for the Theta^2 generators; all zero iff preserved."""
        out = []
        for k in theta_generators(2):
            for c in (Tensor.scalar(ONE), U, V, U_INV * V):
                out.append(collapse_at(self.nabla(tensor(k, c)), 1))
        return out

    def nabla_two_form(self, w: Tensor, check: bool = False) -> Tensor:
        """Quotient connection on Omega^2: lift, apply nabla, collapse the last two slots."""
        if check and any(not t.is_zero() for t in self.theta2_preservation_defects()):
            raise WellDefinednessError("nabla does not preserve Theta^2")
        return collapse_at(self.nabla(lift_two_form(w)), 1)

    # -- Kronecker delta -------------------------------------------------------
    @staticmethod
    def kronecker_delta() -> Tensor:
        return Tensor.monomial(0, 0, ONE, (DU, PU)) + Tensor.monomial(0, 0, ONE, (DV, PV))

    @cached_property
    def delta_hat(self) -> Tensor:
        return self.sigma_vec_inv(self.kronecker_delta(), 0)

    @cached_property
    def dim(self) -> Tensor:
        return ev_at(self.delta_hat, 0)


# ---------------------------------------------------------------------------
# functional surface
# ---------------------------------------------------------------------------

def derive_sigma(p: ConnectionParams) -> BraidMap:
    return TorusConnection(p).sigma


def nabla_one_form(p: ConnectionParams, omega: Tensor) -> Tensor:
    return TorusConnection(p).nabla(omega)


def nabla_tensor(p: ConnectionParams, z: Tensor) -> Tensor:
    return TorusConnection(p).nabla(z)


def nabla_two_form(p: ConnectionParams, w: Tensor) -> Tensor:
    return TorusConnection(p).nabla_two_form(w, check=True)


def dual_connection(p: ConnectionParams) -> Callable[[Tensor], Tensor]:
    return TorusConnection(p).nabla_vec


def sigma_vec(p: ConnectionParams) -> BraidMap:
    return TorusConnection(p).sigma_vec


def sigma_inv_vecvec(p: ConnectionParams) -> BraidMap:
    return TorusConnection(p).sigma_inv_vecvec


def kronecker_delta() -> Tensor:
    return TorusConnection.kronecker_delta()


def dim_torus(p: ConnectionParams | None = None) -> ScalarQ:
    return TorusConnection(p).dim.scalar_value()
