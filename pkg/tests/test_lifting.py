from __future__ import annotations

import pytest

from resolvent.lifting import D2_TABLE, D3_TABLE, all_parameters, check_tables, permanent_cocycles


def test_tables_cover_all_chains():
    assert len(D2_TABLE) == 6
    assert len(D3_TABLE) == 10
    assert len(all_parameters()) == 18


@pytest.mark.parametrize("params", all_parameters())
def test_tables_match_computation(params):
    rows = check_tables(params)
    assert [(n, w) for n, w, ok, _ in rows if not ok] == []


@pytest.mark.parametrize("params", all_parameters())
def test_permanent_cocycles(params):
    assert permanent_cocycles(params) == {"w^3": True, "x^3": True, "y^3": True}


def test_a_perturbed_table_is_detected(monkeypatch):
    broken = dict(D2_TABLE)
    broken["xw"] = [(lambda e, m, t: 1, "x", "w"), (lambda e, m, t: -1, "w", "x")]
    monkeypatch.setattr("resolvent.lifting.D2_TABLE", broken)
    rows = check_tables((1, 0, 0))
    assert [(n, w) for n, w, ok, _ in rows if not ok] == [(2, "xw")]
