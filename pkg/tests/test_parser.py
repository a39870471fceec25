import random
from fractions import Fraction

import pytest
from hypothesis import given

from nivenpoly import ArityError, MPoly, ParseError, parse_poly
from nivenpoly.mpoly import format_mpoly
from nivenpoly.parser import parse_expr

from conftest import mpolys, worked_symmetric_example, random_mpoly


def test_worked_example_parses():
    p = parse_poly("x^3*y + x^3*z + x*y^3 + x*z^3 + y^3*z + y*z^3", 3)
    assert p == worked_symmetric_example()


def test_zero_and_expansion():
    zero = parse_poly("0")
    assert zero.is_zero() and zero.arity == 0
    x1, x2 = MPoly.var(2, 1), MPoly.var(2, 2)
    assert parse_poly("(x1+x2)^2") == x1**2 + 2 * x1 * x2 + x2**2


def test_rationals_and_signs():
    p = parse_poly("-3/4*x1^2 + 2 - x2")
    x1, x2 = MPoly.var(2, 1), MPoly.var(2, 2)
    assert p == Fraction(-3, 4) * x1**2 + 2 - x2
    x = MPoly.var(1, 1)
    assert parse_poly("-(x1 - 1)^3") == -(x**3) + 3 * x**2 - 3 * x + 1


def test_arity_inference_and_override():
    assert parse_poly("x1*x4").arity == 4
    assert parse_poly("x1", 3).arity == 3
    with pytest.raises(ArityError):
        parse_poly("x5", 3)
    with pytest.raises(ArityError):
        parse_poly("z", 2)


def test_aliases_only_for_small_arity():
    assert parse_poly("x*y*z") == parse_poly("x1*x2*x3")
    with pytest.raises(ParseError):
        parse_poly("x + x4")
    with pytest.raises(ParseError):
        parse_poly("y", 4)


@pytest.mark.parametrize(
    "src,col",
    [("x1 +", 5), ("xy", 1), ("x1 ** 2", 5), ("x1^-2", 4), ("2x1", 2), ("(x1", 4), ("x1^x2", 4), ("x0", 1), ("1/0", 3), ("x1 $ 2", 4)],
)
def test_syntax_errors_report_position(src, col):
    with pytest.raises(ParseError) as info:
        parse_poly(src)
    assert info.value.line == 1 and info.value.column == col


def test_multiline_position():
    with pytest.raises(ParseError) as info:
        parse_poly("x1 +\n  * x2")
    assert (info.value.line, info.value.column) == (2, 3)


def test_ast_is_recorded():
    parsed = parse_expr("x1 + 2*x2^3")
    assert parsed.arity == 2 and parsed.source == "x1 + 2*x2^3"


@given(mpolys())
def test_print_parse_fixpoint(p):
    text = format_mpoly(p)
    q = parse_poly(text, p.arity)
    assert q == p
    assert format_mpoly(q) == text


def test_round_trip_random_corpus():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(0, 5)
        p = random_mpoly(rng, n)
        assert parse_poly(format_mpoly(p), n) == p
