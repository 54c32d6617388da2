"""Seeded random samples for property checks (exponents in [-3, 3], <= 3 terms)."""

from __future__ import annotations

import random

from .connections import ConnectionParams
from .interior import ANTISYMMETRIC_GENERATOR, VecTensor
from .scalars import ScalarQ, qpow
from .sphere import SphereParams
from .torus import DU, DV, PU, PV, W, Tensor, sum_tensors, tensor

EXP = 3


def rng_for(seed: int, stream: str = "") -> random.Random:
    """Independent deterministic stream per (seed, name)."""
    return random.Random(f"{seed}:{stream}")


def random_scalar(rng: random.Random, simple: bool = False) -> ScalarQ:
    """Small nonzero element of Q(q): (a + b q) / (c q^k) or a plain integer."""
    while True:
        a, b = rng.randint(-3, 3), rng.randint(-2, 2)
        if simple:
            b = 0
        if a or b:
            break
    num = ScalarQ((a, b))
    if simple or rng.random() < 0.4:
        return num
    den = ScalarQ((rng.randint(1, 3),)) * qpow(rng.randint(0, 2))
    if rng.random() < 0.3:
        den = den * ScalarQ((rng.choice([-2, -1, 1, 2]), 1))
    return num / den


def random_element(rng: random.Random, terms: int = 3) -> Tensor:
    """A torus element with up to ``terms`` monomials."""
    k = rng.randint(1, terms)
    return sum_tensors(
        Tensor.monomial(rng.randint(-EXP, EXP), rng.randint(-EXP, EXP), random_scalar(rng, simple=True))
        for _ in range(k)
    )


def random_nonzero_element(rng: random.Random, terms: int = 3) -> Tensor:
    while True:
        m = random_element(rng, terms)
        if m:
            return m


def random_monomial(rng: random.Random) -> Tensor:
    return Tensor.monomial(rng.randint(-EXP, EXP), rng.randint(-EXP, EXP), random_scalar(rng, simple=True))


def _on_letters(rng: random.Random, letters, terms: int) -> Tensor:
    return sum_tensors(tensor(Tensor.letter(x), random_element(rng, terms)) for x in letters if rng.random() < 0.8)


def random_one_form(rng: random.Random, terms: int = 2) -> Tensor:
    return _on_letters(rng, (DU, DV), terms)


def random_two_form(rng: random.Random, terms: int = 2) -> Tensor:
    return tensor(Tensor.letter(W), random_element(rng, terms))


def random_field(rng: random.Random, terms: int = 2) -> Tensor:
    """a.Du + b.Dv with left coefficients."""
    return sum_tensors(tensor(random_element(rng, terms), Tensor.letter(x)) for x in (PU, PV) if rng.random() < 0.8)


def random_form(rng: random.Random, degree: int, terms: int = 2) -> Tensor:
    if degree == 0:
        return random_element(rng, terms)
    if degree == 1:
        return random_one_form(rng, terms)
    if degree == 2:
        return random_two_form(rng, terms)
    raise ValueError("degree must be 0, 1 or 2")


def random_params(rng: random.Random) -> ConnectionParams:
    names = ConnectionParams.names()
    return ConnectionParams(**{n: random_scalar(rng) for n in names})


def random_antisymmetric(rng: random.Random) -> VecTensor:
    """m.A.n + sum (X.m (x) Y - X (x) m.Y), A the antisymmetric generator.

    pi kills the correction terms, and pi(A) spans the antisymmetric part,
    so every sample passes the antisymmetry check by construction.
    """
    m = random_monomial(rng)
    n = random_monomial(rng)
    x = ANTISYMMETRIC_GENERATOR.left_mul(m).right_mul(n)
    for _ in range(rng.randint(0, 2)):
        a, b, c = random_field(rng, 1), random_field(rng, 1), random_monomial(rng)
        if a and b:
            x = x + VecTensor.pair(tensor(a, c), b) - VecTensor.pair(a, tensor(c, b))
    return x


def random_sphere_params(rng: random.Random) -> SphereParams:
    return SphereParams(*(random_scalar(rng) if rng.random() < 0.8 else ScalarQ() for _ in range(4)))
