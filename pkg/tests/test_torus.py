from __future__ import annotations

import random

from hypothesis import given
from hypothesis import strategies as st

from ncgeom.calculus import DU_T, DV_T, W_T, d, d0, wedge
from ncgeom.parser import eval_text
from ncgeom.scalars import ONE, Q, ScalarQ, qpow
from ncgeom.torus import (
    ONE_T,
    PU,
    PV,
    U,
    U_INV,
    V,
    V_INV,
    Tensor,
    algebra_equal,
    algebra_mul,
    invert_monomial,
    tensor,
)
from conftest import elements, exponent, fields, forms, monomials, one_forms


def swap_oracle(r: int, s: int, n: int, m: int) -> tuple[int, tuple[int, int]]:
    """Normal-order v^r u^s v^n u^m by single adjacent swaps.

    Letters: 'u', 'U' (u^-1), 'v', 'V' (v^-1).  Moving a v-letter left past
    a u-letter costs q^(+-1): u v = q v u, u^-1 v = q^-1 v u^-1, and so on.
    """
    def letters(a, b):
        return ["v" if a > 0 else "V"] * abs(a) + ["u" if b > 0 else "U"] * abs(b)

    word = letters(r, s) + letters(n, m)
    sign = {"u": 1, "U": -1, "v": 1, "V": -1}
    power = 0
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if a in "uU" and b in "vV":
                power += sign[a] * sign[b]
                word[i], word[i + 1] = b, a
                changed = True
    rr = sum(sign[x] for x in word if x in "vV")
    ss = sum(sign[x] for x in word if x in "uU")
    return power, (rr, ss)


def test_relation_examples():
    assert algebra_mul(U, V) == Tensor.monomial(1, 1, Q)
    vu = Tensor.monomial(1, 1)
    assert algebra_mul(vu, vu) == Tensor.monomial(2, 2, Q)
    assert algebra_mul(U, U_INV) == ONE_T
    assert algebra_equal(tensor(U, V), tensor(V, U).scale(Q))
    assert not algebra_equal(U, V)
    assert algebra_equal(tensor(U, V).scale(qpow(-1)), tensor(V, U))


def test_render_examples():
    assert ONE_T.render() == "1"
    assert Tensor.monomial(1, 1, Q).render() == "(q) v^1 u^1"
    assert (V_INV + U).render() == "(1) u^1 + (1) v^-1"


@given(exponent, exponent, exponent, exponent)
def test_q_power_rule_matches_swap_oracle(r, s, n, m):
    power, (rr, ss) = swap_oracle(r, s, n, m)
    assert tensor(Tensor.monomial(r, s), Tensor.monomial(n, m)) == Tensor.monomial(rr, ss, qpow(power))


def test_associativity_many_triples():
    rng = random.Random(0)

    def elem():
        return sum((Tensor.monomial(rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3))
                    for _ in range(rng.randint(1, 4))), Tensor())

    for _ in range(500):
        a, b, c = elem(), elem(), elem()
        assert tensor(tensor(a, b), c) == tensor(a, tensor(b, c))


@given(elements())
def test_unit(a):
    assert tensor(ONE_T, a) == a == tensor(a, ONE_T)


@given(st.one_of(elements(), one_forms(), fields()), st.one_of(elements(), one_forms()), elements())
def test_tensor_associative_on_bimodules(a, b, c):
    assert tensor(tensor(a, b), c) == tensor(a, tensor(b, c))


@given(monomials())
def test_invert_monomial(m):
    assert tensor(m, invert_monomial(m)) == ONE_T


def test_bimodule_relations_of_one_forms():
    # u du = du u, v dv = dv v, v du = q^-1 du v, u dv = q dv u
    assert tensor(U, DU_T) == tensor(DU_T, U)
    assert tensor(V, DV_T) == tensor(DV_T, V)
    assert tensor(V, DU_T) == tensor(DU_T, V).scale(qpow(-1))
    assert tensor(U, DV_T) == tensor(DV_T, U).scale(Q)


def test_relations_are_consistent_with_d():
    # d(uv - q vu) = 0 forces the bimodule relations
    assert d0(tensor(U, V) - tensor(V, U).scale(Q)).is_zero()
    assert d0(tensor(U, V)) == tensor(DU_T, V) + tensor(DV_T, U).scale(Q)


def test_field_letters_dual_twist():
    # v.Du = q Du.v and u.Dv = q^-1 Dv.u, the inverse twist of the forms
    du_field, dv_field = Tensor.letter(PU), Tensor.letter(PV)
    assert tensor(V, du_field) == tensor(du_field, V).scale(Q)
    assert tensor(U, dv_field) == tensor(dv_field, U).scale(qpow(-1))
    assert tensor(U, du_field) == tensor(du_field, U)


def test_wedge_relations_from_d_of_relations():
    assert wedge(DU_T, DU_T).is_zero()
    assert wedge(DV_T, DV_T).is_zero()
    # 0 = d(u dv - q dv u) = du^dv + q dv^du
    assert wedge(DV_T, DU_T) == W_T.scale(-qpow(-1))
    assert wedge(DU_T, DV_T) == W_T


def test_d_examples():
    assert d0(V_INV).render() == "dv·((-1) v^-2)"
    assert d(tensor(DU_T, V)) == -W_T
    assert d0(U_INV) == -tensor(tensor(U_INV, DU_T), U_INV)


@given(elements(), elements())
def test_leibniz(a, b):
    assert d0(tensor(a, b)) == tensor(d0(a), b) + tensor(a, d0(b))


@given(elements(), one_forms())
def test_graded_leibniz(a, w):
    assert d(tensor(a, w)) == wedge(d0(a), w) + tensor(a, d(w))
    assert d(tensor(w, a)) == tensor(d(w), a) - wedge(w, d0(a))


@given(elements())
def test_d_squared(a):
    assert d(d(a)).is_zero()


@given(forms(), forms(), forms())
def test_wedge_associative(a, b, c):
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@given(st.one_of(forms(), fields()))
def test_render_round_trip(z):
    assert eval_text(z.render()) == z


def test_scalar_coefficients_render():
    assert Tensor.scalar(ScalarQ((1,), (2,))).render() == "(1/2)"
    assert Tensor.scalar(ONE).render() == "1"
