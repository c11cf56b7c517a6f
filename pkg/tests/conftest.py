from itertools import product

import pytest
from hypothesis import strategies as st

from vnum.core import AmbientRing, Monomial, MonomialIdeal


@st.composite
def ideals(draw, max_vars=4, max_exp=3, max_gens=5, square_free=False, proper=True):
    n = draw(st.integers(1, max_vars))
    top = 1 if square_free else max_exp
    exps = st.tuples(*[st.integers(0, top)] * n)
    if proper:
        exps = exps.filter(lambda e: sum(e) > 0)
    gens = draw(st.lists(exps, min_size=1, max_size=max_gens))
    return MonomialIdeal(AmbientRing(n), [Monomial(e) for e in gens])


def monomials_up_to(n, max_degree):
    """Every monomial in n variables of degree <= max_degree (brute force)."""
    for e in product(range(max_degree + 1), repeat=n):
        if sum(e) <= max_degree:
            yield Monomial(e)


def in_ideal(gens, m):
    """Membership straight from the definition, without the ideal's own machinery."""
    return any(all(a <= b for a, b in zip(g.exponents, m.exponents)) for g in gens)


@pytest.fixture
def xy():
    return AmbientRing(2, ("x", "y"))


@pytest.fixture
def xyz():
    return AmbientRing(3, ("x", "y", "z"))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS):
            terminalreporter.write_line(line)
