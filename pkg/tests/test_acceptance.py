"""Acceptance criteria 1-9; each test prints one PASS/FAIL line.

The lines are also collected and repeated in the pytest terminal summary
(see conftest.py), so they are visible without ``-s``.
"""

from __future__ import annotations

import time


from resolvent import suites
from resolvent.anick import AnickResolution
from resolvent.cohom import (XI_G, XI_X, XI_Y, betti_numbers, chain_iso_defects, chain_map_defects,
                             cup_product_defects)
from resolvent.lifting import check_tables, permanent_cocycles
from resolvent.presets import bosonization_ring, h27_parameters, truncated_ring
from resolvent.report import Report
from resolvent.ttp import k_complex, y_complex

RESULTS: dict[int, tuple[str, bool, str]] = {}


def record(number: int, title: str, report: Report, started: float) -> None:
    failed = report.failed
    detail = f"{len(report.verdicts)} checks, {len(failed)} failed, {time.perf_counter() - started:.1f}s"
    if failed:
        detail += "; first failure: " + failed[0].name + (f" ({failed[0].reason})" if failed[0].reason else "")
    RESULTS[number] = (title, not failed, detail)
    print(f"criterion {number} {'PASS' if not failed else 'FAIL'}: {title} [{detail}]")
    assert not failed, detail


def test_criterion_1_dimension_certificates():
    t = time.perf_counter()
    report = Report("acceptance", "criterion 1", 3)
    suites.dimension_suite(report)
    record(1, "dimension certificates and tip sets", report, t)


def test_criterion_2_anick_closed_form():
    t = time.perf_counter()
    report = Report("acceptance", "criterion 2", 3)
    for exps in suites.TRUNC_EXPONENTS:
        bad = suites.closed_form_failures(exps, 8)
        report.add(f"trunc{exps} closed form through degree 8", not bad, "; ".join(bad[:3]))
    record(2, "Anick differentials equal the truncated-ring closed form (27 exponent triples)", report, t)


def test_criterion_3_complex_axioms():
    t = time.perf_counter()
    report = Report("acceptance", "criterion 3", 3)
    suites.complex_axioms_suite(report, max_degree=10, samples=100)
    record(3, "d^2 = 0 through degree 10 and homotopy contract on 100 samples per degree", report, t)


def test_criterion_4_lifting_tables():
    t = time.perf_counter()
    report = Report("acceptance", "criterion 4", 3)
    for params in h27_parameters():
        rows = check_tables(params)
        assert len(rows) == 16
        for n, word, ok, got in rows:
            report.add(f"H27{params} d_{n}(1|{word})", ok, "" if ok else got)
    record(4, "explicit d_2 and d_3 tables for all 18 liftings", report, t)


def test_criterion_5_permanent_cocycles():
    t = time.perf_counter()
    report = Report("acceptance", "criterion 5", 3)
    for params in h27_parameters():
        for word, ok in permanent_cocycles(params).items():
            report.add(f"H27{params} d_3^*(({word})^*) = 0", ok)
    record(5, "d_3^* vanishes on the duals of w^3, x^3, y^3", report, t)


def test_criterion_6_ttp_identities():
    t = time.perf_counter()
    report = Report("acceptance", "criterion 6", 3)
    for p, q in suites.TTP_PAIRS:
        suites.ttp_suite(report, p, q)
    families = {v.name.split(")")[0] + ")" for v in report.verdicts}
    for fam in ("(i)", "(ii)", "(iii)", "(iv)", "(v)", "(vi)", "(vii)", "(viii)", "(ix)", "(round-trip)"):
        report.add(f"family {fam} present", fam in families)
    record(6, "twisted tensor product identities for (3,3), (5,5), (3,9)", report, t)


def test_criterion_7_betti_numbers():
    t = time.perf_counter()
    report = Report("acceptance", "criterion 7", 3)
    yb = betti_numbers(y_complex(3, 3), 6)
    report.add("Y(3,3) gives 1,2,5,7,12", yb[:5] == [1, 2, 5, 7, 12], str(yb))
    ab = betti_numbers(AnickResolution(bosonization_ring(3, 3)), 6)
    report.add("Anick equals Y for n <= 6", ab == yb, f"{ab} vs {yb}")
    kb = betti_numbers(k_complex(3), 6)
    report.add("H^n(R) = n+1 for n <= 6", kb == [n + 1 for n in range(7)], str(kb))
    gb = betti_numbers(AnickResolution(truncated_ring(3, 3, 3)), 6)
    report.add("H^n(gr H) = (n+1)(n+2)/2 for n <= 6", gb == [(n + 1) * (n + 2) // 2 for n in range(7)], str(gb))
    record(7, "Betti numbers and resolution independence", report, t)


def test_criterion_8_chain_maps_and_products():
    t = time.perf_counter()
    report = Report("acceptance", "criterion 8", 3)
    Y = y_complex(3, 3)
    for f in (XI_X, XI_Y, XI_G):
        bad = chain_map_defects(f, Y, 10)
        report.add(f"{f.name} chain map through degree 10", not bad, str(bad[:3]))
    bad = cup_product_defects(Y, 8)
    report.add("even cup products through total degree 8", not bad, str(bad[:3]))
    record(8, "index-shift chain maps and even cup products", report, t)


def test_criterion_9_chain_isomorphism():
    t = time.perf_counter()
    report = Report("acceptance", "criterion 9", 3)
    for exps in ((3, 3, 3), (2, 3, 4)):
        bad = chain_iso_defects(*exps, 8)
        report.add(f"trunc{exps} through degree 8", not bad, str(bad[:3]))
    record(9, "Anick resolution of truncated rings is the tensor-product complex", report, t)
