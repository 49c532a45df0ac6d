from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from resolvent.freealg import Alphabet, NcPoly
from resolvent.parse import ParseError, parse_poly

XY = Alphabet(["x", "y"])
WXY = Alphabet(["w", "x", "y"])


def test_nichols_relation_with_half():
    f = parse_poly("y*x - x*y - (1/2)*x^2", XY, 3)
    # yx - xy - 2x^2
    assert f.terms == {(1, 0): 1, (0, 1): -1 % 3, (0, 0): -2 % 3}


def test_power_and_parameters():
    assert parse_poly("w^3", WXY, 3).terms == {(0, 0, 0): 1}
    f = parse_poly("x*w - w*x - e*(w^2+w)", WXY, 3, {"e": 1})
    assert f.terms == {(1, 0): 1, (0, 1): 2, (0, 0): 2, (0,): 2}


def test_parameter_zero_drops_terms():
    f = parse_poly("x*w - w*x - e*(w^2+w)", WXY, 3, {"e": 0})
    assert f.terms == {(1, 0): 1, (0, 1): 2}


def test_fraction_forms():
    assert parse_poly("3/4", XY, 5).terms == {(): 2}
    assert parse_poly("x/2", XY, 7).terms == {(0,): 4}


@pytest.mark.parametrize("text,pos", [("x +", 3), ("x ** y", 3), ("(x + y", 6), ("x $ y", 2), ("z*x", 0)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_poly(text, XY, 3)
    assert info.value.pos == pos


def test_non_invertible_denominator():
    with pytest.raises(ParseError):
        parse_poly("x/3", XY, 3)
    with pytest.raises(ParseError):
        parse_poly("x/y", XY, 3)


def test_parameters_may_not_shadow_generators():
    with pytest.raises(ValueError):
        parse_poly("x", XY, 3, {"x": 1})


coeffs = st.integers(0, 6)


@given(st.lists(st.tuples(coeffs, st.lists(st.sampled_from("xy"), min_size=1, max_size=4)), max_size=5))
def test_written_polynomials_parse_back(terms):
    text = " + ".join(f"{c}*" + "*".join(w) for c, w in terms) or "0"
    expected = NcPoly.zero(XY, 7)
    for c, w in terms:
        expected = expected + NcPoly.monomial("*".join(w), XY, 7, c)
    assert parse_poly(text, XY, 7) == expected
