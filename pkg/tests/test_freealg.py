from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from resolvent.freealg import EQ, GT, LT, Alphabet, NcPoly, cmp_deglex, rising

WXY = Alphabet(["w", "x", "y"])
words = st.lists(st.integers(0, 2), max_size=6).map(tuple)


def poly(text: str, p: int = 3) -> NcPoly:
    return NcPoly(WXY, p, {WXY.word(w): 1 for w in text.split("+")}) if text else NcPoly.zero(WXY, p)


def test_deglex_examples():
    w, x, y = (0,), (1,), (2,)
    assert cmp_deglex(w, x) == LT
    assert cmp_deglex(WXY.word("wy"), WXY.word("x^2")) == LT
    assert cmp_deglex(WXY.word("xy"), WXY.word("xy")) == EQ
    assert cmp_deglex(WXY.word("x^2"), y) == GT


def test_deglex_order_list():
    listed = ["1", "w", "x", "y", "w^2", "wx", "wy", "x^2", "xy"]
    ws = [() if s == "1" else WXY.word(s) for s in listed]
    for a, b in zip(ws, ws[1:]):
        assert cmp_deglex(a, b) == LT


@given(words, words, words)
def test_deglex_is_a_total_order(a, b, c):
    assert cmp_deglex(a, b) == -cmp_deglex(b, a)
    assert (cmp_deglex(a, b) == EQ) == (a == b)
    if cmp_deglex(a, b) == LT and cmp_deglex(b, c) == LT:
        assert cmp_deglex(a, c) == LT


def test_multiply_examples():
    x, y = NcPoly.monomial("x", WXY, 3), NcPoly.monomial("y", WXY, 3)
    assert x * y == NcPoly.monomial("xy", WXY, 3)
    assert (x + y) * x == NcPoly(WXY, 3, {WXY.word("x^2"): 1, WXY.word("yx"): 1})
    assert (2 * x) * (2 * y) == x * y


def test_multiply_rejects_mismatched_characteristic():
    with pytest.raises(ValueError):
        NcPoly.monomial("x", WXY, 3) * NcPoly.monomial("x", WXY, 5)


polys = st.dictionaries(words, st.integers(0, 4), max_size=4).map(lambda d: NcPoly(WXY, 5, d))


@settings(max_examples=60)
@given(polys, polys, polys)
def test_multiply_associative_and_unital(f, g, h):
    one = NcPoly.constant(1, WXY, 5)
    assert (f * g) * h == f * (g * h)
    assert f * one == f == one * f
    assert f * (g + h) == f * g + f * h


@given(words, words)
def test_leading_word_of_monomial_product(a, b):
    prod = NcPoly(WXY, 3, {a: 1}) * NcPoly(WXY, 3, {b: 2})
    assert prod.leading_word() == a + b


def test_no_stored_zeros():
    f = NcPoly(WXY, 3, {(0,): 3, (1,): 1})
    assert (0,) not in f.terms
    assert not (f - f).terms


def test_rising_examples():
    assert rising(4, 0, 7) == 1
    assert rising(0, 2, 3) == 0
    assert rising(2, 2, 5) == 1
    with pytest.raises(ValueError):
        rising(1, -1, 3)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_rising_binomial_identity(p):
    for l1 in range(2 * p + 1):
        for l2 in range(2 * p + 1):
            for t in range(2 * p + 1):
                rhs = sum(comb(t, k) * rising(l1, k, p) * rising(l2 + 1, t - k, p) for k in range(t + 1))
                assert rising(l1 + l2 + 1, t, p) == rhs % p


def test_word_parsing_and_printing():
    assert WXY.word("yx^2") == (2, 1, 1)
    assert WXY.word("y*x^2") == (2, 1, 1)
    assert WXY.word_str((2, 1, 1)) == "yx^2"
    assert WXY.word_str(()) == "1"


def test_str_round_trips_through_parser():
    from resolvent.parse import parse_poly

    f = NcPoly(WXY, 5, {WXY.word("xy"): 1, WXY.word("x^2"): 3, (): 4})
    assert parse_poly(str(f), WXY, 5) == f
