import sys
from itertools import combinations_with_replacement

import pytest
from hypothesis import strategies as st

from sqfmult.monomial_core import MonomialIdeal, minimalize


def monomials_up_to(n, max_deg):
    """Every monomial in n variables of degree <= max_deg."""
    out = []
    for deg in range(max_deg + 1):
        for combo in combinations_with_replacement(range(n), deg):
            exps = [0] * n
            for i in combo:
                exps[i] += 1
            out.append(tuple(exps))
    return out


def sq(n, *supports):
    return MonomialIdeal.from_supports(supports, n)


@st.composite
def squarefree_ideals(draw, max_n=5, max_gens=6):
    n = draw(st.integers(1, max_n))
    supports = draw(
        st.lists(
            st.sets(st.integers(1, n), min_size=1, max_size=n),
            min_size=1,
            max_size=max_gens,
        )
    )
    return MonomialIdeal.from_supports(supports, n)


@st.composite
def monomial_ideals(draw, max_n=4, max_gens=4, max_exp=3):
    n = draw(st.integers(1, max_n))
    exps = st.tuples(*[st.integers(0, max_exp)] * n).filter(any)
    gens = draw(st.lists(exps, min_size=1, max_size=max_gens))
    return minimalize(gens, n)


@pytest.fixture
def triangle():
    return sq(3, [1, 2], [2, 3], [1, 3])


@pytest.fixture
def c5():
    return sq(5, [1, 2], [2, 3], [3, 4], [4, 5], [5, 1])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for res in sorted(results, key=lambda r: r.number):
            terminalreporter.write_line(res.line())
