from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from resolvent.freealg import NcPoly
from resolvent.presets import (bosonization, bosonization_ring, h27_parameters, h27_ring, nichols,
                               nichols_ring, truncated, truncated_ring)
from resolvent.rewrite import (CompletionInconclusive, InfiniteDimensional, Presentation,
                               complete, normal_form, normal_words)


def tipset(rs):
    return sorted(rs.format_tip(t) for t in rs.tips)


def test_nichols_normal_forms():
    rs = nichols_ring(3)
    assert rs.parse("y*x") == rs.parse("x*y + 2*x^2")
    assert rs.parse("y*x^2") == rs.parse("x^2*y")


@pytest.mark.parametrize("params", [(1, 0, 0), (0, 2, 1), (1, 1, 2)])
def test_h27_yw_rule(params):
    e, m, t = params
    rs = h27_ring(*params)
    want = rs.parse("w*y + w*x + x - (m - e)*(w^2 + w)", {"m": m, "e": e})
    assert rs.parse("y*w") == want


def test_bosonization_tips_p3():
    rs = complete(bosonization(3, 3))
    assert tipset(rs) == sorted(["w^3", "x^3", "y^3", "xw", "yw", "yx"])
    assert rs.dimension() == 27


def test_truncated_tips():
    rs = complete(truncated(2, 3, 4))
    assert tipset(rs) == sorted(["w^2", "x^3", "y^4", "xw", "yw", "yx"])
    assert rs.dimension() == 24


@pytest.mark.parametrize("params", h27_parameters())
def test_h27_is_27_dimensional(params):
    rs = h27_ring(*params)
    assert rs.dimension() == 27
    assert tipset(rs) == sorted(["w^3", "x^3", "y^3", "xw", "yw", "yx"])


def test_normal_words_of_nichols():
    words = normal_words(nichols_ring(3))
    assert len(words) == 9
    assert sorted(words) == sorted((0,) * i + (1,) * j for i in range(3) for j in range(3))
    assert words == sorted(words, key=lambda w: (len(w), w))


def test_dimension_of_bosonization_3_9():
    assert len(normal_words(bosonization_ring(3, 9))) == 81


def test_completion_adds_missing_rules():
    # x^3 = x y^2 = (xy) y = 0 and y x^2 = y^3 = (y^2) y = x^2 y = 0 follow from the overlaps
    pres = Presentation.from_strings(["x", "y"], 5, ["x*y", "y^2 - x^2"])
    rs = complete(pres)
    assert tipset(rs) == sorted(["xy", "y^2", "x^3", "yx^2"])
    assert rs.dimension() == 5
    assert not rs.overlap_defects()


def test_constant_term_rejected():
    with pytest.raises(ValueError):
        Presentation.from_strings(["x"], 3, ["x^2 - 1"])


def test_infinite_algebra_is_inconclusive():
    pres = Presentation.from_strings(["x", "y"], 3, ["y*x - x*y"])
    with pytest.raises(CompletionInconclusive) as info:
        complete(pres)
    assert info.value.partial is not None


def test_infinite_normal_words_raise():
    pres = Presentation.from_strings(["x", "y"], 3, ["y*x - x*y"])
    rs = complete(pres, require_finite=False)
    with pytest.raises(InfiniteDimensional):
        rs.normal_words()


def test_degree_cap_below_relations_rejected():
    with pytest.raises(ValueError):
        complete(nichols(3), degree_cap=2)


def test_confluence_on_presets():
    for rs in (nichols_ring(5), bosonization_ring(3, 3), h27_ring(1, 2, 2), truncated_ring(3, 3, 3)):
        assert rs.overlap_defects() == []


def _poly_strategy(rs):
    words = st.lists(st.integers(0, len(rs.alphabet) - 1), max_size=6).map(tuple)
    return st.dictionaries(words, st.integers(0, rs.p - 1), max_size=5).map(
        lambda d: NcPoly(rs.alphabet, rs.p, d))


H = h27_ring(1, 1, 2)


@settings(max_examples=50, deadline=None)
@given(_poly_strategy(H), _poly_strategy(H))
def test_normal_form_idempotent_and_multiplicative(f, g):
    nf = normal_form(f, H)
    assert normal_form(nf, H) == nf
    assert all(H.is_normal(w) for w in nf.terms)
    assert normal_form(f * g, H) == normal_form(nf * normal_form(g, H), H)


@pytest.mark.parametrize("rs", [nichols_ring(3), bosonization_ring(3, 3), h27_ring(0, 1, 1)])
def test_normal_words_closed_under_product(rs):
    words = rs.normal_words()
    for a in words[:12]:
        for b in words:
            assert all(w in set(words) for w in rs.reduce_word(a + b))
