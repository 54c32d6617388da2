"""Exact noncommutative differential geometry on the quantum torus, plus a
matrix-level braiding analyzer for the quantum sphere.

All arithmetic is exact in Q(q); see the submodules for the conventions.
"""

from __future__ import annotations

from .scalars import ONE, Q, ZERO, PoleError, ScalarQ, poly_gcd, qpow, scalar_arith, scalar_eval
from .torus import U, U_INV, V, V_INV, Tensor, monomial, tensor
from .calculus import d, wedge
from .connections import BraidMap, ConnectionParams, TorusConnection, derive_sigma, dim_torus
from .interior import VecTensor, curvature, interior, lie_derivative, phi, torsion
from .flows import FormalSeries, closed_form_series, exp_lie
from .sphere import SphereParams, sphere_dim, sphere_sigma
from .parser import ParseError, eval_text, parse
from .suites import SuiteConfig, run_suite
from .report import Report, emit

__version__ = "0.1.0"

__all__ = [
    "ONE", "Q", "ZERO", "PoleError", "ScalarQ", "poly_gcd", "qpow", "scalar_arith", "scalar_eval",
    "U", "U_INV", "V", "V_INV", "Tensor", "monomial", "tensor",
    "d", "wedge",
    "BraidMap", "ConnectionParams", "TorusConnection", "derive_sigma", "dim_torus",
    "VecTensor", "curvature", "interior", "lie_derivative", "phi", "torsion",
    "FormalSeries", "closed_form_series", "exp_lie",
    "SphereParams", "sphere_dim", "sphere_sigma",
    "ParseError", "eval_text", "parse",
    "SuiteConfig", "run_suite",
    "Report", "emit",
]
