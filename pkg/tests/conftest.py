from __future__ import annotations

from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ncgeom.scalars import ScalarQ
from ncgeom.torus import DU, DV, PU, PV, W, Tensor, sum_tensors, tensor

settings.register_profile("repo", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

# rational points used as an independent oracle for Q(q) identities
SAMPLE_POINTS = [Fraction(2), Fraction(-3), Fraction(5, 7), Fraction(-11, 4)]

small_int = st.integers(-4, 4)
exponent = st.integers(-3, 3)


@st.composite
def polys(draw, max_degree=3):
    return tuple(draw(st.lists(small_int, max_size=max_degree + 1)))


@st.composite
def scalars(draw, nonzero=False):
    num = draw(polys())
    den = draw(polys().filter(lambda p: any(p)))
    s = ScalarQ(num, den)
    if nonzero and not s:
        s = ScalarQ((1,))
    return s


@st.composite
def elements(draw, max_terms=3):
    n = draw(st.integers(0, max_terms))
    return sum_tensors(
        Tensor.monomial(draw(exponent), draw(exponent), draw(st.integers(-3, 3)))
        for _ in range(n)
    )


@st.composite
def monomials(draw):
    return Tensor.monomial(draw(exponent), draw(exponent), draw(st.sampled_from([1, -1, 2, 3])))


@st.composite
def one_forms(draw):
    return tensor(Tensor.letter(DU), draw(elements())) + tensor(Tensor.letter(DV), draw(elements()))


@st.composite
def two_forms(draw):
    return tensor(Tensor.letter(W), draw(elements()))


@st.composite
def forms(draw):
    deg = draw(st.integers(0, 2))
    return draw([elements(), one_forms(), two_forms()][deg])


@st.composite
def fields(draw):
    return tensor(draw(elements(2)), Tensor.letter(PU)) + tensor(draw(elements(2)), Tensor.letter(PV))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.CRITERIA_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.CRITERIA_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)
