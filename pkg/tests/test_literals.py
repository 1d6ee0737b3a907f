import pytest
from hypothesis import given
from hypothesis import strategies as st

from cfkit.contfrac import ContinuedFraction
from cfkit.literals import ParseError, parse_cf, parse_rational, render_cf

cfs = st.tuples(
    st.integers(-50, 50), st.lists(st.integers(0, 50), max_size=8)
).map(lambda t: ContinuedFraction(t[0], tuple(t[1])))


def test_parse_plain():
    assert parse_cf("[0;2,2]") == ContinuedFraction(0, (2, 2))
    assert parse_cf("[0,2,2]") == ContinuedFraction(0, (2, 2))
    assert parse_cf("[1,0]") == ContinuedFraction(1, (0,))
    assert parse_cf("[7]") == ContinuedFraction(7)
    assert parse_cf("[-3; 1, 2]") == ContinuedFraction(-3, (1, 2))


def test_parse_repetition_groups():
    assert parse_cf("[1,(0,1)^3]") == ContinuedFraction(1, (0, 1, 0, 1, 0, 1))
    assert parse_cf("[0;(1,2)^2,5]") == ContinuedFraction(0, (1, 2, 1, 2, 5))
    assert parse_cf("[2,(3,4,5)^1]") == ContinuedFraction(2, (3, 4, 5))


def test_parse_whitespace_insignificant():
    assert parse_cf(" [ 0 ; 2 , 2 ] ") == ContinuedFraction(0, (2, 2))
    assert parse_cf("[1, ( 0 , 1 ) ^ 2]") == ContinuedFraction(1, (0, 1, 0, 1))


def test_render_is_canonical():
    assert render_cf(ContinuedFraction(0, (2, 2))) == "[0; 2, 2]"
    assert render_cf(ContinuedFraction(4)) == "[4]"


@given(cfs)
def test_render_parse_round_trip(cf):
    assert parse_cf(render_cf(cf)) == cf


@pytest.mark.parametrize(
    "text",
    [
        "",
        "[",
        "]",
        "[1,0",
        "[1,0,]",
        "[1,,2]",
        "[a]",
        "[1,0] extra",
        "[1,(0)^2]",      # group needs at least two integers
        "[1,(0,1)^0]",    # exponent must be positive
        "[1,(0,1)]",      # group without exponent
        "[0,-1]",         # negative term after a0
        "[0,(1,-2)^2]",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_cf(text)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as exc:
        parse_cf("[1,0,]")
    assert exc.value.position == 5
    assert "position 5" in str(exc.value)


def test_parse_rational():
    from fractions import Fraction

    assert parse_rational("2/5") == Fraction(2, 5)
    assert parse_rational("0") == 0
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational(" 7 / 21 ") == Fraction(1, 3)


@pytest.mark.parametrize("text", ["", "abc", "1/2/3", "2.5", "1e3", "2/0", "/3"])
def test_parse_rational_errors(text):
    with pytest.raises(ParseError):
        parse_rational(text)
