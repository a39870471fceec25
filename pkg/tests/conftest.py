import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from nivenpoly import Monomial, MPoly
from nivenpoly.mpoly import symmetrize

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
small_ints = st.integers(min_value=-9, max_value=9)


@st.composite
def monomials(draw, arity, max_exp=5):
    return Monomial(draw(st.lists(st.integers(0, max_exp), min_size=arity, max_size=arity)))


@st.composite
def mpolys(draw, arity=None, max_terms=8, max_exp=5, coeffs=rationals):
    if arity is None:
        arity = draw(st.integers(1, 4))
    terms = draw(st.lists(st.tuples(monomials(arity, max_exp), coeffs), max_size=max_terms))
    return MPoly(arity, terms)


@st.composite
def mpoly_pairs(draw, count=2, **kw):
    arity = draw(st.integers(1, 4))
    return tuple(draw(mpolys(arity=arity, **kw)) for _ in range(count))


def random_fraction(rng: random.Random, bound: int = 100) -> Fraction:
    num = rng.randint(-bound, bound)
    while num == 0:
        num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


def random_symmetric(rng: random.Random, max_arity=4, max_degree=6, integer=False) -> MPoly:
    """Sum of orbit sums of 1-4 random monomials of bounded total degree."""
    n = rng.randint(1, max_arity)
    p = MPoly.zero(n)
    for _ in range(rng.randint(1, 4)):
        d = rng.randint(0, max_degree)
        exps = [0] * n
        for _ in range(d):
            exps[rng.randrange(n)] += 1
        c = Fraction(rng.randint(-100, 100)) if integer else random_fraction(rng)
        p = p + symmetrize(Monomial(exps), c)
    return p


def random_mpoly(rng: random.Random, arity: int, max_terms=8, max_exp=5) -> MPoly:
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        terms.append(
            (Monomial(rng.randint(0, max_exp) for _ in range(arity)), random_fraction(rng, 20))
        )
    return MPoly(arity, terms)


@pytest.fixture
def rng():
    return random.Random(20161014)


def xyz():
    return MPoly.var(3, 1), MPoly.var(3, 2), MPoly.var(3, 3)


def worked_symmetric_example():
    x, y, z = xyz()
    return x**3 * y + x**3 * z + x * y**3 + x * z**3 + y**3 * z + z**3 * y


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") == "call" and "test_acceptance.py::test_criterion" in rep.nodeid:
                name = rep.nodeid.split("::")[-1]
                lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(lines):
            terminalreporter.write_line(f"{verdict}  {name}")
