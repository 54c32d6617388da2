"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL ...`` line and then
asserts; the lines are repeated in the pytest terminal summary.
All comparisons are exact equalities in Q(q).
"""

from __future__ import annotations

import io
import time
from contextlib import redirect_stdout

from ncgeom.calculus import W_T
from ncgeom.cli import main
from ncgeom.connections import TORUS_SIGMA_TABLE, ConnectionParams, TorusConnection, derive_sigma, ev_at
from ncgeom.flows import KINDS, cochain_check, field_of_kind, homotopy_check
from ncgeom.interior import (
    ANTISYMMETRIC_GENERATOR,
    PU_T,
    PV_T,
    braid_relation_holds,
    compatibility_check,
    curvature,
    interior,
    phi,
    sigma_squared_is_identity,
    torsion,
)
from ncgeom.parser import eval_text
from ncgeom.randgen import random_element, random_form, random_params, rng_for
from ncgeom.report import emit_json
from ncgeom.scalars import Q, ScalarQ
from ncgeom.sphere import SphereParams, sphere_dim
from ncgeom.suites import (
    SPECIAL_POINTS,
    SuiteConfig,
    closed_form_sweep,
    descent_identities,
    dim_agreement,
    phi_identities,
    run_suite,
    sphere_samples,
    sphere_table_check,
)
from ncgeom.torus import DU, DV, PU, PV, U, U_INV, V, V_INV, Tensor, tensor
from test_cli import CORPUS

SEED = 0
# collected for the terminal summary (see conftest.py)
CRITERIA_LINES: list[str] = []


def report(n: int, ok: bool, detail: str):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    CRITERIA_LINES.append(line)
    assert ok, detail


def twenty_params():
    rng = rng_for(SEED, "acceptance-params")
    return [random_params(rng) for _ in range(20)]


def test_criterion_01_torus_braiding_table():
    bad = [p for p in twenty_params() if derive_sigma(p) != TORUS_SIGMA_TABLE]
    report(1, not bad, f"derived sigma equals the constant table for {20 - len(bad)}/20 parameter sets")


def test_criterion_02_dim_torus():
    dims = [TorusConnection(p).dim for p in twenty_params()]
    ok = all(dm == Tensor.scalar(2) for dm in dims)
    report(2, ok, f"dim = 2 for {sum(dm == Tensor.scalar(2) for dm in dims)}/20 parameter sets")


def test_criterion_03_delta_centrality_evaluation():
    failures = []
    rng = rng_for(SEED, "acceptance-delta")
    delta = TorusConnection.kronecker_delta()
    for i, p in enumerate(twenty_params()):
        c = TorusConnection(p)
        if not c.nabla(delta).is_zero():
            failures.append(f"nabla(delta) != 0 at set {i}")
        for m in (U, V, U_INV, V_INV, random_element(rng)):
            if tensor(m, delta) != tensor(delta, m):
                failures.append(f"delta not central at set {i}")
        for a in (PU, PV):
            for x in (DU, DV):
                for y in (DU, DV):
                    z = Tensor.monomial(0, 0, 1, (a, x, y))
                    if ev_at(z, 0) != ev_at(c.sigma_vec(c.sigma(z, 1), 0), 1):
                        failures.append(f"evaluation not preserved at set {i}")
    report(3, not failures, "; ".join(failures[:3]) or "nabla(delta) = 0, delta central, evaluation preserved for 20 sets")


def test_criterion_04_interior_products():
    a = interior(PU_T, W_T)
    b = interior(PV_T, W_T)
    ok = a == Tensor.letter(DV) and b == Tensor.letter(DU).scale(-Q)
    report(4, ok, f"Du int du^dv = {a.render()}, Dv int du^dv = {b.render()}")


def test_criterion_05_phi():
    zero = phi(ANTISYMMETRIC_GENERATOR)
    ok_ids, _, detail = phi_identities(SEED, 100)
    report(5, zero.is_zero() and ok_ids, f"phi(generator) = {zero.render()}; 100 random inputs: {detail}")


def test_criterion_06_compatibility():
    r = compatibility_check(TORUS_SIGMA_TABLE)
    braid = braid_relation_holds(TORUS_SIGMA_TABLE)
    square = sigma_squared_is_identity(TORUS_SIGMA_TABLE)
    report(6, r.ok and braid and square,
           f"eigenspace={r.eigenspace} T3={r.t3} braid relation={braid} sigma^2=id={square}")


def test_criterion_07_exponentials():
    start = time.perf_counter()
    results = [closed_form_sweep(kind, 8) for kind in KINDS]
    elapsed = time.perf_counter() - start
    ok = all(r[0] for r in results) and elapsed <= 5.0
    report(7, ok, f"{'; '.join(r[2] for r in results)}; {elapsed:.2f}s")


def test_criterion_08_cochain_and_homotopy():
    rng = rng_for(SEED, "acceptance-cochain")
    forms = [random_form(rng, i % 3) for i in range(50)]
    bad = []
    for kind in KINDS:
        x = field_of_kind(kind)
        for w in forms:
            if not cochain_check(x, w, 7):
                bad.append(f"cochain {kind} {w.render()}")
            if w.words() and not w.is_algebra() and not homotopy_check(x, w, 8):
                bad.append(f"homotopy {kind} {w.render()}")
    report(8, not bad, "; ".join(bad[:2]) or "50 random forms x 2 fields, through order 7")


def test_criterion_09_curvature_torsion():
    flat = TorusConnection(ConnectionParams())
    flat_ok = all(curvature(flat, ANTISYMMETRIC_GENERATOR, e).is_zero()
                  for e in (PU_T, PV_T, Tensor.letter(DU), Tensor.letter(DV)))
    flat_ok = flat_ok and torsion(flat, ANTISYMMETRIC_GENERATOR).is_zero()
    ok, _, detail = descent_identities(SEED, 100)
    report(9, ok and flat_ok, f"flat vanish={flat_ok}; 100 random inputs: {detail}")


def test_criterion_10_sphere_tables_and_dim():
    lines = []
    ok = True
    for claim in ("compatible", "braid relation", "sigma^2 = id", "invertible"):
        good, _, detail = sphere_table_check(claim, SPECIAL_POINTS + sphere_samples(SEED, 20, claim))
        ok &= good
        lines.append(f"{claim}: {detail}")
    points = list(SPECIAL_POINTS)
    for claim in ("compatible", "braid relation", "sigma^2 = id", "invertible"):
        points += sphere_samples(SEED, 20, claim)
    points = [p for p in points if p.x]
    dim_bad = [p for p in points if not dim_agreement(p)[0]]
    zero = sphere_dim(SphereParams()) == ScalarQ((2,))
    ok &= not dim_bad and zero
    lines.append(f"dim formula at {len(points) - len(dim_bad)}/{len(points)} sampled h; dim(0) = 2: {zero}")
    report(10, ok, " | ".join(lines))


def test_criterion_11_parser_and_report():
    bad = [t for t in CORPUS if eval_text(eval_text(t).render()) != eval_text(t)]
    cfg = SuiteConfig(seed=SEED, samples=5)
    first, second = emit_json(run_suite("torus", cfg)), emit_json(run_suite("torus", cfg))
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(["eval", "u*v"])
    printed = buf.getvalue().strip()
    ok = not bad and first == second and code == 0 and printed == Tensor.monomial(1, 1, Q).render() == "(q) v^1 u^1"
    report(11, ok, f"round trip {len(CORPUS) - len(bad)}/{len(CORPUS)}; json byte-stable={first == second}; eval u*v -> {printed}")
