"""Verification suites: torus, sphere, flows.

Each suite is a deterministic list of named checks (fixed order, seeded
randomness).  A check compares a derived quantity with a closed-form golden
value or asserts an identity on random samples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .calculus import DU_T, DV_T, W_T, d, d0, theta_generators, wedge
from .connections import (
    TORUS_SIGMA_TABLE,
    BraidMap,
    ConnectionParams,
    TorusConnection,
    ev_at,
    evaluate,
)
from .flows import (
    KINDS,
    closed_form_series,
    cochain_check,
    exp_lie,
    field_of_kind,
    geodesic,
    geodesic_residual,
    homotopy_check,
    parallel_transport,
    transport_residual,
)
from .interior import (
    ANTISYMMETRIC_GENERATOR,
    PU_T,
    PV_T,
    antisymmetry_check,
    braid_relation_holds,
    compatibility_check,
    curvature,
    directional,
    interior,
    lie_derivative,
    phi,
    phi_apply,
    sigma_squared_is_identity,
    torsion,
)
from .randgen import (
    random_antisymmetric,
    random_element,
    random_field,
    random_form,
    random_monomial,
    random_one_form,
    random_params,
    random_scalar,
    random_two_form,
    rng_for,
)
from .report import Report
from .scalars import ONE, ScalarQ, qpow, scalar_eval
from .sphere import (
    BRAID_CASES,
    CASE_VALUES,
    COMPAT_CASES,
    H121_SPECIAL,
    H211_SPECIAL,
    Q2,
    SQUARE_CASES,
    SphereParams,
    braid_relation_check,
    displayed_dim,
    displayed_vec_sigma,
    sigma_square_and_invertibility,
    sphere_compat,
    sphere_dim,
    sphere_sigma,
    sphere_vec_sigma,
    stated_cases,
)
from .torus import DU, DV, PU, PV, U, U_INV, V, V_INV, W, ZERO_T, Tensor, sum_tensors, tensor

SUITES = ("torus", "sphere", "flows")


@dataclass
class SuiteConfig:
    params: ConnectionParams | None = None
    h: SphereParams | None = None
    case: str | None = None
    order: int = 8
    seed: int = 0
    samples: int = 20
    eval_q: Fraction | None = None


# ---------------------------------------------------------------------------
# golden closed forms on the torus
# ---------------------------------------------------------------------------

def _w(*letters) -> Tensor:
    return Tensor.monomial(0, 0, ONE, letters)


def _tq(k: int) -> ScalarQ:
    return qpow(k)


VEC_SIGMA_TABLE = BraidMap({
    (PU, DU): _w(DU, PU),
    (PV, DU): _w(DU, PV).scale(_tq(1)),
    (PV, DV): _w(DV, PV),
    (PU, DV): _w(DV, PU).scale(_tq(-1)),
})

VECVEC_SIGMA_INV_TABLE = BraidMap({
    (PU, PU): _w(PU, PU),
    (PV, PU): _w(PU, PV).scale(_tq(-1)),
    (PV, PV): _w(PV, PV),
    (PU, PV): _w(PV, PU).scale(_tq(1)),
})


def displayed_nabla_vec(p: ConnectionParams) -> dict:
    """The closed forms of nabla(Du) and nabla(Dv) for the eight-parameter family."""
    def t(c, form, coeff, fld):
        return tensor(tensor(Tensor.letter(form), coeff), Tensor.letter(fld)).scale(c)

    q, qi = _tq(1), _tq(-1)
    nu = sum_tensors([
        t(-p.r_uu, DU, U_INV, PU),
        t(-qi * p.r_vu, DV, V_INV, PU),
        t(-qi * p.s_vu, DV, U_INV, PV),
        t(-p.s_uu, DU, V * U_INV * U_INV, PV),
    ])
    nv = sum_tensors([
        t(-p.s_vv, DV, V_INV, PV),
        t(-q * p.s_uv, DU, U_INV, PV),
        t(-q * p.r_uv, DU, V_INV, PU),
        t(-p.r_vv, DV, U * V_INV * V_INV, PU),
    ])
    return {PU: nu, PV: nv}


def displayed_nabla_two_form(p: ConnectionParams) -> Tensor:
    a = p.r_uu * _tq(-1) + p.s_uv
    b = p.r_vu + _tq(1) * p.s_vv
    return (tensor(_w(DU, W), U_INV).scale(a) + tensor(_w(DV, W), V_INV).scale(b))


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _all_equal(pairs) -> tuple[bool, str]:
    """(ok, first mismatch rendering) for an iterable of (lhs, rhs)."""
    n = 0
    for lhs, rhs in pairs:
        n += 1
        if lhs != rhs:
            return False, f"mismatch: {_render(lhs)} != {_render(rhs)}"
    return True, f"{n} samples equal"


def _render(x) -> str:
    return x.render() if hasattr(x, "render") else str(x)


def _param_sets(config: SuiteConfig) -> list[ConnectionParams]:
    rng = rng_for(config.seed, "params")
    sets = [config.params if config.params is not None else ConnectionParams()]
    sets += [random_params(rng) for _ in range(config.samples)]
    return sets


def _fields(rng) -> list[Tensor]:
    return [PU_T, PV_T, tensor(U, PU_T), random_field(rng), random_field(rng)]


# ---------------------------------------------------------------------------
# torus
# ---------------------------------------------------------------------------

def torus_suite(config: SuiteConfig) -> Report:
    rep = Report("torus")
    psets = _param_sets(config)
    conns = [TorusConnection(p) for p in psets]
    main = conns[0]
    n = len(conns)

    rep.run("algebra: u*v = q v u", lambda: (tensor(U, V) == Tensor.monomial(1, 1, _tq(1)), "(q) v^1 u^1", tensor(U, V).render()))
    rep.run("calculus: d(u v) = du.v + q dv.u", lambda: _eq(d0(tensor(U, V)), tensor(DU_T, V) + tensor(DV_T, U).scale(_tq(1))))

    def d_squared():
        rng = rng_for(config.seed, "d2")
        return _identity(((d(d0(m)), ZERO_T) for m in (random_element(rng) for _ in range(config.samples))))
    rep.run("calculus: d^2 = 0", d_squared)

    rep.run(f"sigma derived from nabla equals the constant table ({n} parameter sets)",
            lambda: _identity((c.sigma, TORUS_SIGMA_TABLE) for c in conns))

    def sigma_well_defined():
        rng = rng_for(config.seed, "sigma-wd")
        pairs = []
        for c in conns:
            for _ in range(3):
                e, a, b = random_one_form(rng, 1), random_element(rng, 2), random_element(rng, 2)
                pairs.append((c.sigma(tensor(e, tensor(a, d0(b)))), c.sigma_formula(e, a, b)))
        return _identity(pairs)
    rep.run("sigma(e (x) a db) = nabla(e.ab) - nabla(e.a).b on random e, a, b", sigma_well_defined)

    def leibniz():
        rng = rng_for(config.seed, "leibniz")
        pairs = []
        for c in conns:
            m, w = random_element(rng, 2), random_one_form(rng, 2)
            pairs.append((c.nabla(tensor(m, w)), tensor(d0(m), w) + tensor(m, c.nabla(w))))
            pairs.append((c.nabla_left(tensor(w, m)), tensor(c.nabla_left(w), m) + c.sigma(tensor(w, d0(m)))))
            pairs.append((c.nabla(w), c.nabla_left(w)))
        return _identity(pairs)
    rep.run("left and right Leibniz rules agree", leibniz)

    def bimodule():
        rng = rng_for(config.seed, "sigma-bimod")
        s = TORUS_SIGMA_TABLE
        pairs = []
        for _ in range(config.samples):
            m, w, e, a = random_element(rng, 2), random_one_form(rng), random_one_form(rng), random_element(rng, 2)
            z = tensor(w, e)
            pairs.append((s(tensor(m, z)), tensor(m, s(z))))
            pairs.append((s(tensor(z, m)), tensor(s(z), m)))
            pairs.append((s(tensor(tensor(w, a), e)), s(tensor(w, tensor(a, e)))))
        return _identity(pairs)
    rep.run("sigma is a bimodule map", bimodule)

    rep.run("sigma^2 = id on basis words", lambda: _bool(sigma_squared_is_identity(TORUS_SIGMA_TABLE)))
    rep.run("sigma satisfies the braid relation", lambda: _bool(braid_relation_holds(TORUS_SIGMA_TABLE)))
    rep.run("Theta^2 lies in the +1 eigenspace of sigma",
            lambda: _identity((TORUS_SIGMA_TABLE(k), k) for k in theta_generators(2)))

    rep.run(f"dual connection matches the closed form ({n} parameter sets)",
            lambda: _identity(pair for c in conns for pair in
                              ((c.vec_generators[PU], displayed_nabla_vec(c.params)[PU]),
                               (c.vec_generators[PV], displayed_nabla_vec(c.params)[PV]))))
    rep.run("sigma on Vec (x) Omega^1 matches the table", lambda: _identity((c.sigma_vec, VEC_SIGMA_TABLE) for c in conns))
    rep.run("sigma^-1 on Vec (x) Vec matches the table", lambda: _identity((c.sigma_inv_vecvec, VECVEC_SIGMA_INV_TABLE) for c in conns))

    rep.run("Kronecker delta", lambda: _eq(main.kronecker_delta(), _w(DU, PU) + _w(DV, PV)))
    rep.run("delta hat = sigma^-1 delta", lambda: _eq(main.delta_hat, _w(PU, DU) + _w(PV, DV)))
    rep.run(f"dim = 2 ({n} parameter sets)", lambda: _identity((c.dim, Tensor.scalar(2)) for c in conns))
    rep.run(f"nabla(delta) = 0 ({n} parameter sets)", lambda: _identity((c.nabla(c.kronecker_delta()), ZERO_T) for c in conns))

    def central():
        rng = rng_for(config.seed, "central")
        delta = main.kronecker_delta()
        ms = [U, V, U_INV, V_INV] + [random_element(rng) for _ in range(config.samples)]
        return _identity((tensor(m, delta), tensor(delta, m)) for m in ms)
    rep.run("delta is central", central)

    def ev_preserved():
        pairs = []
        for c in conns:
            for a in (PU, PV):
                for x in (DU, DV):
                    for y in (DU, DV):
                        z = _w(a, x, y)
                        pairs.append((ev_at(z, 0), ev_at(c.sigma_vec(c.sigma(z, 1), 0), 1)))
        return _identity(pairs)
    rep.run("evaluation is preserved by the braidings", ev_preserved)

    def ev_compatible():
        rng = rng_for(config.seed, "ev-nabla")
        pairs = []
        for c in conns:
            alpha, e = random_field(rng), random_one_form(rng)
            lhs = d0(evaluate(alpha, e))
            rhs = ev_at(tensor(c.nabla(alpha), e), 1) + ev_at(c.sigma_vec(tensor(alpha, c.nabla(e)), 0), 1)
            pairs.append((lhs, rhs))
        return _identity(pairs)
    rep.run("d(alpha(e)) splits through the connections", ev_compatible)

    rep.run(f"nabla preserves Theta^2 ({n} parameter sets)",
            lambda: _identity((t, ZERO_T) for c in conns for t in c.theta2_preservation_defects()))
    rep.run(f"nabla(du^dv) matches the closed form ({n} parameter sets)",
            lambda: _identity((c.nabla_two_form(W_T), displayed_nabla_two_form(c.params)) for c in conns))

    rep.run("interior: Du int du^dv = dv", lambda: _eq(interior(PU_T, W_T), DV_T))
    rep.run("interior: Dv int du^dv = -q du", lambda: _eq(interior(PV_T, W_T), DU_T.scale(-_tq(1))))

    def interior_bimodule():
        rng = rng_for(config.seed, "int-bimod")
        pairs = []
        for _ in range(config.samples):
            x, m = random_field(rng), random_element(rng, 2)
            for w in (random_one_form(rng), random_two_form(rng)):
                pairs.append((interior(x, tensor(w, m)), tensor(interior(x, w), m)))
                pairs.append((interior(tensor(m, x), w), tensor(m, interior(x, w))))
                pairs.append((interior(x, w, alternate=True), interior(x, w)))
        return _identity(pairs)
    rep.run("interior is a bimodule map and lift independent", interior_bimodule)

    def compat():
        r = compatibility_check(TORUS_SIGMA_TABLE)
        return r.ok, "Theta^2 eigenspace and T3 conditions hold", f"eigenspace={r.eigenspace} T3={r.t3} {r.witnesses[:1]}"
    rep.run("interior product is compatible with the calculus", compat)

    rep.run("antisymmetric generator Dv(x)Du - q^-1 Du(x)Dv", lambda: _bool(antisymmetry_check(ANTISYMMETRIC_GENERATOR)))
    rep.run("phi(Dv(x)Du - q^-1 Du(x)Dv) = 0", lambda: _eq(phi(ANTISYMMETRIC_GENERATOR), ZERO_T))
    rep.run("phi module identities on random antisymmetric inputs", lambda: phi_identities(config.seed, config.samples))

    def lie_examples():
        pairs = [
            (lie_derivative(PU_T, Tensor.monomial(2, 3)), Tensor.monomial(2, 2, _tq(-2) * 3)),
            (lie_derivative(tensor(U, PU_T), tensor(V, U)), tensor(V, U)),
            (lie_derivative(tensor(U, PU_T), tensor(W_T, tensor(V, U))), tensor(W_T, tensor(V, U)).scale(2)),
        ]
        return _identity(pairs)
    rep.run("Lie derivative examples", lie_examples)
    rep.run("d L_X = L_X d and Lie product rules", lambda: lie_identities(config.seed, config.samples))

    rep.run("flat connection: curvature and torsion vanish", lambda: _identity([
        (curvature(TorusConnection(), ANTISYMMETRIC_GENERATOR, PU_T), ZERO_T),
        (curvature(TorusConnection(), ANTISYMMETRIC_GENERATOR, DU_T), ZERO_T),
        (torsion(TorusConnection(), ANTISYMMETRIC_GENERATOR), ZERO_T),
    ]))
    rep.run("curvature and torsion descent identities", lambda: descent_identities(config.seed, config.samples))

    if config.eval_q is not None:
        rep.run(f"numeric spot check at q = {config.eval_q}", lambda: torus_numeric(main, config.eval_q))
    return rep


def _eq(actual, expected):
    return actual == expected, _render(expected), _render(actual)


def _bool(ok: bool):
    return ok, "True", str(ok)


def _identity(pairs):
    if isinstance(pairs, tuple):
        pairs = list(pairs)
    ok, msg = _all_equal(pairs)
    return ok, "all samples equal", msg


def phi_identities(seed: int, count: int):
    """The module defect formulas of phi, plus right linearity of phi(x)."""
    rng = rng_for(seed, "phi")
    pairs = []
    for _ in range(count):
        x = random_antisymmetric(rng)
        m = random_monomial(rng)
        # phi(x).m = phi(x.m) + X.D_Y(m)
        defect = sum_tensors(tensor(a, directional(b, m)) for a, b in x.pairs())
        pairs.append((tensor(phi(x), m), phi(x.right_mul(m)) + defect))
        # phi(X (x) m.Y) = phi(X.m (x) Y) + D_X(m).Y
        defect = sum_tensors(tensor(directional(a, m), b) for a, b in x.pairs())
        pairs.append((phi(x.inner_right(m), check=False), phi(x.inner_left(m), check=False) + defect))
        # left module map
        pairs.append((phi(x.left_mul(m)), tensor(m, phi(x))))
        # phi(x) is a right module map Omega^1 -> T^2_q, independent of the lift
        xi, n = random_one_form(rng), random_element(rng, 2)
        pairs.append((phi_apply(x, tensor(xi, n)), tensor(phi_apply(x, xi), n)))
        pairs.append((phi_apply(x, xi), evaluate(phi(x), xi)))
        pairs.append((phi_apply(x, tensor(n, xi), alternate=True), phi_apply(x, tensor(n, xi))))
    return _identity(pairs)


def lie_identities(seed: int, count: int):
    rng = rng_for(seed, "lie")
    pairs = []
    for i in range(count):
        x = [PU_T, PV_T, tensor(U, PU_T), random_field(rng)][i % 4]
        m = random_element(rng, 2)
        for deg in (0, 1, 2):
            w = random_form(rng, deg)
            if deg < 2:
                pairs.append((d(lie_derivative(x, w)), lie_derivative(x, d(w))))
            dm = d0(m)
            # (a) L_X(m.w) = L_(X.m)(w) + X int (dm ^ w)
            pairs.append((lie_derivative(x, tensor(m, w)),
                          lie_derivative(tensor(x, m), w) + interior(x, wedge(dm, w))))
            # (b) L_(m.X)(w) = dm ^ (X int w) + m.L_X w
            pairs.append((lie_derivative(tensor(m, x), w),
                          wedge(dm, interior(x, w)) + tensor(m, lie_derivative(x, w))))
            # (c) L_X(w.m) = L_X(w).m + (-1)^|w| (X int (w ^ dm) - (X int w) ^ dm)
            corr = interior(x, wedge(w, dm)) - wedge(interior(x, w), dm)
            pairs.append((lie_derivative(x, tensor(w, m)),
                          tensor(lie_derivative(x, w), m) + (corr if deg % 2 == 0 else -corr)))
            if deg == 2:
                pairs.append((lie_derivative(x, w, alternate=True), lie_derivative(x, w)))
    return _identity(pairs)


def descent_identities(seed: int, count: int):
    rng = rng_for(seed, "descent")
    pairs = []
    for _ in range(count):
        conn = TorusConnection(random_params(rng))
        x = random_antisymmetric(rng)
        m = random_monomial(rng)
        e = random_one_form(rng, 1) if rng.random() < 0.5 else random_field(rng, 1)
        pairs.append((curvature(conn, x.inner_right(m), e, check=False),
                      curvature(conn, x.inner_left(m), e, check=False)))
        pairs.append((curvature(conn, x, tensor(m, e)), curvature(conn, x.right_mul(m), e)))
        pairs.append((curvature(conn, x.left_mul(m), e), tensor(m, curvature(conn, x, e))))
        pairs.append((torsion(conn, x.inner_left(m), check=False), torsion(conn, x.inner_right(m), check=False)))
        pairs.append((torsion(conn, x.left_mul(m)), tensor(m, torsion(conn, x))))
    return _identity(pairs)


def torus_numeric(conn: TorusConnection, q0):
    """Specialize the Omega^2 connection coefficient at q = q0 both ways."""
    p = conn.params
    coeff = conn.nabla_two_form(W_T).coefficient((DU, W)).terms.get(((), 0, -1), ScalarQ())
    direct = scalar_eval(p.r_uu, q0) / q0 + scalar_eval(p.s_uv, q0)
    got = scalar_eval(coeff, q0)
    dim = scalar_eval(conn.dim.scalar_value(), q0)
    return got == direct and dim == 2, f"coeff={direct} dim=2", f"coeff={got} dim={dim}"


# ---------------------------------------------------------------------------
# flows
# ---------------------------------------------------------------------------

def flows_suite(config: SuiteConfig) -> Report:
    rep = Report("flows")
    N = config.order
    u_du = field_of_kind("uDu")

    rep.run("exp(t L_Du) u = u + t", lambda: _eq(exp_lie(PU_T, U, N).truncate(1), _series([U, Tensor.scalar(1)])))
    rep.run("exp(t L_uDu) v = v", lambda: _eq(exp_lie(u_du, V, N), _series([V] + [ZERO_T] * N)))
    rep.run("exp(t L_Du) u^-1 = u^-1 - t u^-2 + t^2 u^-3 + ...",
            lambda: _eq(exp_lie(PU_T, U_INV, 2), _series([U_INV, -Tensor.monomial(0, -2), Tensor.monomial(0, -3)])))

    for kind in KINDS:
        rep.run(f"exp(t L_{kind}) equals the closed form through t^{N} for |r|,|s| <= 3",
                lambda kind=kind: closed_form_sweep(kind, N))

    def cochain():
        rng = rng_for(config.seed, "cochain")
        bad = []
        total = 0
        for kind in KINDS:
            x = field_of_kind(kind)
            for i in range(config.samples):
                w = random_form(rng, i % 2)
                total += 1
                if not cochain_check(x, w, N):
                    bad.append(w.render())
        return not bad, f"{total} samples", f"{total - len(bad)} agree" + (f"; first failure {bad[0]}" if bad else "")
    rep.run(f"d K = K d through t^{N}", cochain)

    def homotopy():
        rng = rng_for(config.seed, "homotopy")
        bad = []
        total = 0
        for kind in KINDS:
            x = field_of_kind(kind)
            for i in range(config.samples):
                w = random_form(rng, 1 + i % 2)
                total += 1
                if not homotopy_check(x, w, N):
                    bad.append(w.render())
        return not bad, f"{total} samples", f"{total - len(bad)} agree" + (f"; first failure {bad[0]}" if bad else "")
    rep.run(f"dK/dt = d h + h d through t^{N - 1}", homotopy)

    rep.run("parallel transport example", lambda: _eq(
        parallel_transport(TorusConnection(ConnectionParams(r_uu=1)), PU_T, PU_T, 1),
        _series([PU_T, tensor(U_INV, PU_T)])))

    def transport():
        rng = rng_for(config.seed, "transport")
        pairs = []
        for _ in range(max(1, config.samples // 4)):
            conn = TorusConnection(random_params(rng))
            x = random_field(rng, 1)
            for c0 in (random_field(rng, 1), random_one_form(rng, 1)):
                s = parallel_transport(conn, x, c0, min(N, 4))
                pairs.append((transport_residual(conn, x, s), _zero_series(s.order - 1)))
            c0 = random_field(rng, 1)
            g = geodesic(conn, c0, min(N, 4))
            pairs.append((geodesic_residual(conn, g), _zero_series(g.order - 1)))
        return _identity(pairs)
    rep.run("parallel transport and geodesic series solve their equations", transport)
    rep.run("flat geodesic through Du is constant",
            lambda: _eq(geodesic(TorusConnection(), PU_T, N), _series([PU_T] + [ZERO_T] * N)))
    return rep


def _series(coeffs):
    from .flows import FormalSeries

    return FormalSeries(coeffs)


def _zero_series(order: int):
    from .flows import FormalSeries

    return FormalSeries.zero(order)


def closed_form_sweep(kind: str, order: int = 8):
    x = field_of_kind(kind)
    total = 0
    bad = []
    for r in range(-3, 4):
        for s in range(-3, 4):
            for w in (Tensor.monomial(r, s), _w(DU) * Tensor.monomial(r, s),
                      _w(DV) * Tensor.monomial(r, s), _w(W) * Tensor.monomial(r, s)):
                total += 1
                if exp_lie(x, w, order) != closed_form_series(kind, w, order):
                    bad.append(w.render())
    # a few mixed one-forms du.v^r u^s + dv.v^n u^m
    for r, s, n, m in ((1, -2, 0, 3), (-3, 3, 2, -1), (0, 0, -2, 2)):
        w = _w(DU) * Tensor.monomial(r, s) + _w(DV) * Tensor.monomial(n, m)
        total += 1
        if exp_lie(x, w, order) != closed_form_series(kind, w, order):
            bad.append(w.render())
    return not bad, f"{total} monomials", f"{total - len(bad)} agree" + (f"; first failure {bad[0]}" if bad else "")


# ---------------------------------------------------------------------------
# sphere
# ---------------------------------------------------------------------------

def _sphere_h(config: SuiteConfig) -> SphereParams:
    if config.h is not None:
        return config.h
    if config.case is not None:
        return CASE_VALUES[config.case]
    return SphereParams()


def _describe(h: SphereParams) -> str:
    return f"h111={h.h111.render()} h121={h.h121.render()} h211={h.h211.render()} h221={h.h221.render()}"


def sphere_claims(h: SphereParams) -> dict:
    """(computed, stated) for each case table at one parameter point."""
    c = sphere_compat(h)
    sq = sigma_square_and_invertibility(h)
    return {
        "compatible": (c.ok, bool(stated_cases(COMPAT_CASES, h))),
        "braid relation": (braid_relation_check(h), bool(stated_cases(BRAID_CASES, h))),
        "sigma^2 = id": (sq.square_is_identity, bool(stated_cases(SQUARE_CASES, h))),
        "invertible": (sq.invertible, bool(h.x)),
    }


def sphere_samples(seed: int, count: int, claim: str) -> list[SphereParams]:
    """Random points drawn from the stated families and their neighbourhoods."""
    rng = rng_for(seed, f"sphere-{claim}")
    z = ScalarQ()

    def r():
        return random_scalar(rng)

    families = {
        "compatible": [
            lambda: SphereParams(r(), H121_SPECIAL, z, z),
            lambda: SphereParams(z, z, H211_SPECIAL, r()),
            lambda: SphereParams(z, r(), z, z),
            lambda: SphereParams(z, z, r(), z),
            lambda: SphereParams(z, r(), r(), z),
            lambda: SphereParams(r(), r(), r(), r()),
        ],
        "braid relation": [
            lambda: SphereParams(z, r(), z, z),
            lambda: SphereParams(z, z, r(), z),
            lambda: SphereParams(r(), H121_SPECIAL, z, z),
            lambda: SphereParams(z, r(), r(), z),
            lambda: SphereParams(r(), r(), r(), r()),
        ],
        "sigma^2 = id": [
            lambda: (lambda t: SphereParams(r(), Q2 * t, t, r()))(r()),
            lambda: SphereParams(z, r(), z, z),
            lambda: SphereParams(r(), r(), r(), r()),
        ],
        "invertible": [
            lambda: (lambda t: SphereParams(r(), (Q2 - 1).inverse() + Q2 * t, t, r()))(r()),
            lambda: SphereParams(r(), r(), r(), r()),
        ],
    }[claim]
    return [rng.choice(families)() for _ in range(count)]


SPECIAL_POINTS = [SphereParams()] + [CASE_VALUES[k] for k in "abcd"] + [
    SphereParams(h121=H121_SPECIAL),  # compatible case (a) with h111 = 0
    SphereParams(h111=ScalarQ((1,)), h121=ScalarQ((1,)), h211=ScalarQ((1,))),
    SphereParams(h121=ScalarQ((1,)), h211=ScalarQ((1,))),
    SphereParams(h121=Q2 * ScalarQ((2,)), h211=ScalarQ((2,))),
    SphereParams(h121=(Q2 - 1).inverse()),
]


def sphere_table_check(claim: str, points: list[SphereParams]):
    bad = []
    for h in points:
        computed, stated = sphere_claims(h)[claim]
        if computed != stated:
            bad.append(f"[{_describe(h)}] computed={computed} stated={stated}")
    return not bad, f"{len(points)} points agree with the stated cases", (
        f"{len(points) - len(bad)} agree; disagreements: " + "; ".join(bad) if bad else f"{len(points)} points agree")


def render_matrix(m: list) -> str:
    return "[" + "; ".join(", ".join(x.render() for x in row) for row in m) + "]"


def dim_agreement(h: SphereParams):
    """Compare dim with its closed form; both are undefined when sigma_Vec is singular."""
    vec_det = linalg.determinant(sphere_vec_sigma(h))
    x = h.x
    denominator = x * x + Q2 * (Q2 - 1) * (Q2 - 1) * (h.h121 * h.h211 - h.h111 * h.h221)
    if not vec_det:
        return not denominator, "undefined (closed-form denominator 0)", (
            "undefined (sigma_Vec singular)" + ("" if not denominator else f"; denominator {denominator.render()}"))
    got, want = sphere_dim(h), displayed_dim(h)
    return got == want, want.render(), got.render()


def sphere_suite(config: SuiteConfig) -> Report:
    rep = Report("sphere")
    h = _sphere_h(config)
    label = _describe(h)

    for claim in ("compatible", "braid relation", "sigma^2 = id", "invertible"):
        def one(claim=claim):
            computed, stated = sphere_claims(h)[claim]
            actual = f"computed={computed}"
            if claim == "compatible" and computed != stated:
                actual += f"; T3 defect (rows dz, dzb) = {render_matrix(sphere_compat(h).t3_defect)}"
            return computed == stated, f"stated={stated}", actual
        rep.run(f"{claim} at {label}", one)

    rep.run(f"det sigma = x at {label}", lambda: _eq(linalg.determinant(sphere_sigma(h)), h.x))
    if h.x:
        rep.run(f"Vec braiding matches the closed form at {label}",
                lambda: (linalg.equal(sphere_vec_sigma(h), displayed_vec_sigma(h)), "closed form", "duality solution"))
        rep.run(f"dim matches the closed form at {label}", lambda: dim_agreement(h))
    rep.run("dim at h = 0 is 2", lambda: _eq(sphere_dim(SphereParams()), ScalarQ((2,))))

    for claim in ("compatible", "braid relation", "sigma^2 = id", "invertible"):
        pts = SPECIAL_POINTS + sphere_samples(config.seed, config.samples, claim)
        rep.run(f"case table: {claim} (special values + {config.samples} random)",
                lambda pts=pts, claim=claim: sphere_table_check(claim, pts))

    def dim_sweep():
        rng = rng_for(config.seed, "sphere-dim")
        pts = [p for p in SPECIAL_POINTS if p.x]
        while len(pts) < len(SPECIAL_POINTS) + config.samples:
            p = SphereParams(*(random_scalar(rng) for _ in range(4)))
            if p.x:
                pts.append(p)
        bad = [p for p in pts if not dim_agreement(p)[0] or not linalg.equal(sphere_vec_sigma(p), displayed_vec_sigma(p))]
        return not bad, f"{len(pts)} points", f"{len(pts) - len(bad)} agree" + (f"; first failure {_describe(bad[0])}" if bad else "")
    rep.run("Vec braiding and dim closed forms on sampled h", dim_sweep)

    def dim_line():
        # dim along h(t) = a + t b at t = 0, 1, 2: generically not constant
        rng = rng_for(config.seed, "sphere-line")
        a = [random_scalar(rng) for _ in range(4)]
        b = [random_scalar(rng) for _ in range(4)]
        vals = []
        for t in range(3):
            p = SphereParams(*(ai + bi * t for ai, bi in zip(a, b)))
            vals.append(sphere_dim(p))
        distinct = len(set(vals))
        return distinct > 1 and ScalarQ((2,)) not in vals, "nonconstant, not 2", ", ".join(v.render() for v in vals)
    rep.run("dim is nonconstant along a random line in h", dim_line)

    def det_sweep():
        rng = rng_for(config.seed, "sphere-det")
        pts = [SphereParams(*(random_scalar(rng) for _ in range(4))) for _ in range(config.samples)]
        return _identity((linalg.determinant(sphere_sigma(p)), p.x) for p in pts)
    rep.run("det sigma = x on sampled h", det_sweep)

    if config.eval_q is not None and h.x:
        def numeric():
            got = scalar_eval(sphere_dim(h), config.eval_q)
            want = scalar_eval(displayed_dim(h), config.eval_q)
            return got == want, str(want), str(got)
        rep.run(f"numeric dim at q = {config.eval_q}", numeric)
    return rep


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def run_suite(name: str, config: SuiteConfig | None = None) -> Report:
    config = config or SuiteConfig()
    if name == "torus":
        return torus_suite(config)
    if name == "sphere":
        return sphere_suite(config)
    if name == "flows":
        return flows_suite(config)
    if name == "all":
        rep = Report("all")
        for sub in SUITES:
            rep.extend(run_suite(sub, config), prefix=f"{sub}: ")
        return rep
    raise ValueError(f"unknown suite {name!r}; expected one of {SUITES + ('all',)}")
