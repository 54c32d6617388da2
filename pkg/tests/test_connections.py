from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncgeom.calculus import DU_T, DV_T, W_T, d0
from ncgeom.connections import (
    TORUS_SIGMA_TABLE,
    BraidMap,
    ConnectionParams,
    TorusConnection,
    derive_sigma,
    dim_torus,
    dual_connection,
    ev_at,
    kronecker_delta,
    nabla_generator,
    nabla_one_form,
    nabla_two_form,
    sigma_inv_vecvec,
    sigma_r_apply,
    sigma_vec,
)
from ncgeom.scalars import ONE, Q, ScalarQ, qpow
from ncgeom.suites import displayed_nabla_two_form, displayed_nabla_vec
from ncgeom.torus import DU, DV, PU, PV, U, U_INV, V, V_INV, W, ZERO_T, Tensor, tensor
from conftest import elements, one_forms, scalars

PU_T, PV_T = Tensor.letter(PU), Tensor.letter(PV)
NAMES = ConnectionParams.names()


def word(*letters, coeff=ONE):
    return Tensor.monomial(0, 0, coeff, letters)


def only(name, value=1):
    return ConnectionParams(**{name: value})


params = st.builds(lambda vals: ConnectionParams(**dict(zip(NAMES, vals))),
                   st.lists(scalars(), min_size=8, max_size=8))


def test_params_names_and_coercion():
    assert list(NAMES) == ["r_uu", "r_vu", "r_uv", "r_vv", "s_vv", "s_vu", "s_uv", "s_uu"]
    p = ConnectionParams(r_uu=2)
    assert p.r_uu == ScalarQ((2,)) and p.as_dict()["r_vv"] == ScalarQ()


def test_nabla_generator_examples():
    assert nabla_generator(only("r_uu"), DU) == tensor(word(DU, DU), U_INV)
    assert nabla_generator(ConnectionParams(), DU) == ZERO_T
    assert nabla_generator(only("s_uu"), DV) == tensor(word(DU, DU), tensor(V, tensor(U_INV, U_INV)))


def test_nabla_one_form_examples():
    zero = ConnectionParams()
    assert nabla_one_form(zero, tensor(DU_T, U)) == word(DU, DU)
    assert nabla_one_form(zero, tensor(U, DU_T)) == word(DU, DU)


def test_sigma_table_examples():
    s = derive_sigma(ConnectionParams())
    assert s(word(DU, DV)) == word(DV, DU, coeff=Q)
    assert s(word(DV, DU)) == word(DU, DV, coeff=qpow(-1))
    assert s(word(DU, DU)) == word(DU, DU)
    assert s(word(DV, DV)) == word(DV, DV)
    assert s == TORUS_SIGMA_TABLE


@given(params, params)
def test_sigma_is_parameter_independent(p1, p2):
    assert derive_sigma(p1) == derive_sigma(p2) == TORUS_SIGMA_TABLE


@given(params, one_forms(), elements(2), elements(2))
def test_sigma_well_defined(p, e, a, b):
    c = TorusConnection(p)
    assert c.sigma(tensor(e, tensor(a, d0(b)))) == c.sigma_formula(e, a, b)


@given(params, elements(2), one_forms())
def test_left_and_right_leibniz(p, m, w):
    c = TorusConnection(p)
    assert c.nabla(tensor(m, w)) == tensor(d0(m), w) + tensor(m, c.nabla(w))
    assert c.nabla(tensor(w, m)) == tensor(c.nabla(w), m) + c.sigma(tensor(w, d0(m)))
    assert c.nabla(w) == c.nabla_left(w)


@given(elements(2), one_forms(), one_forms(), elements(2))
def test_sigma_bimodule_map(m, w, e, a):
    s = TORUS_SIGMA_TABLE
    z = tensor(w, e)
    assert s(tensor(m, z)) == tensor(m, s(z))
    assert s(tensor(z, m)) == tensor(s(z), m)
    assert s(tensor(tensor(w, a), e)) == s(tensor(w, tensor(a, e)))


def test_sigma_r_apply():
    s = TORUS_SIGMA_TABLE
    z = word(DU, DV, DU)
    assert sigma_r_apply(s, 1, z) == z
    assert sigma_r_apply(s, 2, word(DU, DV)) == word(DV, DU, coeff=Q)
    # sigma_3 = (sigma (x) id)(id (x) sigma): du dv du -> q^-1 du du dv -> q^-1 du du dv
    assert sigma_r_apply(s, 3, z) == word(DU, DU, DV, coeff=qpow(-1))


def test_braid_map_inverse_and_singular():
    s = TORUS_SIGMA_TABLE
    pairs = [(a, b) for a in (DU, DV) for b in (DU, DV)]
    assert s.inverse(pairs, pairs) == s
    singular = BraidMap({k: ZERO_T for k in pairs})
    with pytest.raises(ZeroDivisionError):
        singular.inverse(pairs, pairs)


def test_dual_connection_examples():
    assert dual_connection(ConnectionParams())(PU_T) == ZERO_T
    assert dual_connection(ConnectionParams())(PV_T) == ZERO_T
    assert dual_connection(only("r_uu"))(PU_T) == -tensor(tensor(DU_T, U_INV), PU_T)
    assert dual_connection(only("r_vv"))(PV_T) == -tensor(tensor(DV_T, tensor(U, tensor(V_INV, V_INV))), PU_T)


@given(params)
def test_dual_connection_matches_closed_form(p):
    c = TorusConnection(p)
    shown = displayed_nabla_vec(p)
    assert c.nabla_vec(PU_T) == shown[PU]
    assert c.nabla_vec(PV_T) == shown[PV]


def test_vec_braidings():
    sv = sigma_vec(ConnectionParams())
    assert sv(word(PU, DV)) == word(DV, PU, coeff=qpow(-1))
    assert sv(word(PV, DU)) == word(DU, PV, coeff=Q)
    assert sv(word(PU, DU)) == word(DU, PU)
    si = sigma_inv_vecvec(ConnectionParams())
    assert si(word(PU, PV)) == word(PV, PU, coeff=Q)


def test_delta_and_dim():
    assert kronecker_delta() == word(DU, PU) + word(DV, PV)
    c = TorusConnection()
    assert c.delta_hat == word(PU, DU) + word(PV, DV)
    assert dim_torus() == ScalarQ((2,))


@given(params)
def test_dim_and_flat_delta(p):
    c = TorusConnection(p)
    assert dim_torus(p) == ScalarQ((2,))
    assert c.nabla(kronecker_delta()).is_zero()


@given(elements())
def test_delta_is_central(m):
    delta = kronecker_delta()
    assert tensor(m, delta) == tensor(delta, m)


@given(params)
def test_evaluation_preserved_on_basis(p):
    c = TorusConnection(p)
    for a in (PU, PV):
        for x in (DU, DV):
            for y in (DU, DV):
                z = word(a, x, y)
                assert ev_at(z, 0) == ev_at(c.sigma_vec(c.sigma(z, 1), 0), 1)


def test_nabla_two_form_examples():
    assert nabla_two_form(ConnectionParams(), W_T) == ZERO_T
    assert nabla_two_form(only("s_uv"), W_T) == tensor(word(DU, W), U_INV)
    assert nabla_two_form(only("r_vu"), W_T) == tensor(word(DV, W), V_INV)


@given(params)
def test_nabla_two_form_closed_form_and_theta(p):
    c = TorusConnection(p)
    assert all(t.is_zero() for t in c.theta2_preservation_defects())
    assert nabla_two_form(p, W_T) == displayed_nabla_two_form(p)
