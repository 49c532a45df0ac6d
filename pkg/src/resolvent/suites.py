"""Verification suites shared by the CLI and the acceptance tests.

Each suite appends pass/fail verdicts to a :class:`~resolvent.report.Report`.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Iterable, List, Sequence, Tuple

from .anick import (AnickResolution, d_squared_failures, homotopy_contract_failures,
                    truncated_closed_form, truncated_index)
from .cohom import (ILL_SIGNED_XI_X, XI_G, XI_X, XI_Y, ZERO_MAP, CochainComplex, betti_numbers,
                    chain_iso_defects, chain_map_defects, cup_product_defects, exactness_defects,
                    y_description_defects)
from .lifting import check_tables, permanent_cocycles
from .presets import (bosonization_ring, h27_parameters, h27_ring, nichols_ring,
                      truncated_ring)
from .report import Report
from .ttp import TwistParams, k_complex, verify_identities, y_complex

TTP_PAIRS = ((3, 3), (5, 5), (3, 9))
TRUNC_EXPONENTS = tuple(product((2, 3, 4), repeat=3))


def _short(items: Sequence, limit: int = 3) -> str:
    items = [str(i) for i in items]
    extra = f" (+{len(items) - limit} more)" if len(items) > limit else ""
    return "; ".join(items[:limit]) + extra


def closed_form_failures(exps: Tuple[int, int, int], max_degree: int) -> List[str]:
    res = AnickResolution(truncated_ring(*exps))
    bad = []
    for n in range(1, max_degree + 1):
        for ci, chain in enumerate(res.chains(n)):
            i, j, k = truncated_index(chain)
            want = {}
            for (word, tgt), s in truncated_closed_form(exps, i, j, k).items():
                tgt_chain = next(c for c in res.chains(n - 1) if truncated_index(c) == tgt)
                want[(word, tgt_chain)] = s
            if res.differential(n, ci) != res.element(n - 1, want):
                bad.append(f"n={n} u_{i}{j}{k}")
    return bad


def anick_suite(report: Report, exponents: Iterable[Tuple[int, int, int]] = TRUNC_EXPONENTS,
                max_degree: int = 8, samples: int = 100, seed: int = 0) -> None:
    g = "anick"
    for exps in exponents:
        name = "trunc(" + ",".join(map(str, exps)) + ")"
        bad = closed_form_failures(exps, max_degree)
        report.add(f"{name} closed form through degree {max_degree}", not bad, _short(bad), g)
        res = AnickResolution(truncated_ring(*exps))
        bad = d_squared_failures(res, max_degree)
        report.add(f"{name} d^2 = 0 through degree {max_degree}", not bad, _short(bad), g)
        rng = random.Random(seed)
        bad = []
        for n in range(1, min(6, max_degree) + 1):
            bad += [f"n={n}: {e}" for e in homotopy_contract_failures(res, n, samples, rng)]
        report.add(f"{name} homotopy contract on {samples} samples per degree", not bad, _short(bad), g)
        bad = exactness_defects(res, min(4, max_degree - 1))
        report.add(f"{name} rank exactness", not bad, _short(bad), g)


def preset_rings():
    return [("nichols(p=3)", nichols_ring(3)), ("nichols(p=5)", nichols_ring(5)),
            ("bosonization(3,3)", bosonization_ring(3, 3)), ("bosonization(3,9)", bosonization_ring(3, 9)),
            ("H27(1,1,1)", h27_ring(1, 1, 1)), ("H27(0,2,1)", h27_ring(0, 2, 1)),
            ("trunc(3,3,3)", truncated_ring(3, 3, 3))]


def complex_axioms_suite(report: Report, max_degree: int = 10, samples: int = 100, seed: int = 0) -> None:
    g = "complexes"
    for name, rs in preset_rings():
        res = AnickResolution(rs)
        bad = d_squared_failures(res, max_degree)
        report.add(f"Anick {name} d^2 = 0 through degree {max_degree}", not bad, _short(bad), g)
        rng = random.Random(seed)
        bad = []
        for n in range(1, 7):
            bad += [f"n={n}" for _ in homotopy_contract_failures(res, n, samples, rng)]
        report.add(f"Anick {name} homotopy contract, {samples} samples in degrees 1-6", not bad, _short(bad), g)
    for p, q in TTP_PAIRS:
        for label, cx in ((f"K(p={p})", k_complex(p)), (f"Y(p={p},q={q})", y_complex(p, q))):
            bad = cx.d_squared_defects(max_degree)
            report.add(f"{label} d^2 = 0 through degree {max_degree}", not bad, _short(bad), g)


def ttp_suite(report: Report, p: int, q: int, max_degree: int = 10) -> None:
    for c in verify_identities(TwistParams(p, q), max_degree=max_degree, equivariance_degree=min(8, max_degree)):
        report.add(f"({c.family}) {c.name} [{c.cases} cases]", c.passed, c.detail, f"ttp p={p} q={q}")


def h27_suite(report: Report, tuples: Iterable[Tuple[int, int, int]] | None = None) -> None:
    for params in tuples or h27_parameters():
        g = "h27 eps={} mu={} tau={}".format(*params)
        rs = h27_ring(*params)
        report.add("27 normal words and six tips", rs.dimension() == 27 and len(rs.tips) == 6,
                   f"dim {rs.dimension()}, {len(rs.tips)} tips", g)
        for n, word, ok, got in check_tables(params):
            report.add(f"d_{n}(1|{word}) matches the table", ok, "" if ok else got, g)
        for word, ok in permanent_cocycles(params).items():
            report.add(f"d_3^* kills ({word})^*", ok, "", g)


def cohomology_suite(report: Report, max_degree: int = 10) -> None:
    g = "cohomology"
    Y = y_complex(3, 3)
    yb = betti_numbers(Y, 6)
    report.add("Y(3,3) Betti numbers 1,2,5,7,12", yb[:5] == [1, 2, 5, 7, 12], str(yb[:5]), g)
    ab = betti_numbers(AnickResolution(bosonization_ring(3, 3)), 6)
    report.add("Anick and Y agree on R#kG for n <= 6", ab == yb, f"{ab} vs {yb}", g)
    for p in (3, 5):
        kb = betti_numbers(k_complex(p), 6)
        report.add(f"H^n(R) = n+1 for p={p}", kb == list(range(1, 8)), str(kb), g)
    gb = betti_numbers(AnickResolution(truncated_ring(3, 3, 3)), 6)
    report.add("H^n(gr H) = (n+1)(n+2)/2", gb == [(n + 1) * (n + 2) // 2 for n in range(7)], str(gb), g)
    cc = CochainComplex(Y)
    bad = [n for n in range(max_degree - 1) if not cc.squares_to_zero(n)]
    report.add("coboundaries compose to zero on Y", not bad, _short(bad), g)
    bad = y_description_defects(Y, 8)
    report.add("Y cocycles and coboundaries follow the parity description", not bad, _short(bad), g)
    for f in (XI_X, XI_Y, XI_G, ZERO_MAP):
        bad = chain_map_defects(f, Y, max_degree)
        report.add(f"{f.name} is a chain map through degree {max_degree}", not bad, _short(bad), g)
    bad = chain_map_defects(ILL_SIGNED_XI_X, Y, max_degree)
    report.add("ill-signed shift map is rejected", bool(bad), _short(bad), g)
    bad = cup_product_defects(Y, 8)
    report.add("even cup products add indices through degree 8", not bad, _short(bad), g)
    for exps in ((3, 3, 3), (2, 3, 4)):
        bad = chain_iso_defects(*exps, 8)
        report.add(f"Anick and tensor complexes agree for trunc{exps}", not bad, _short(bad), g)
    for name, rs in (("bosonization(3,3)", bosonization_ring(3, 3)), ("H27(1,1,1)", h27_ring(1, 1, 1))):
        bad = exactness_defects(AnickResolution(rs), 4)
        report.add(f"rank exactness for {name} through degree 4", not bad, _short(bad), g)


def dimension_suite(report: Report) -> None:
    g = "dimensions"
    for p in (3, 5, 7):
        rs = nichols_ring(p)
        tips = sorted(rs.format_tip(t) for t in rs.tips)
        want = sorted([f"x^{p}", f"y^{p}", "yx"])
        report.add(f"nichols p={p}: dim {p * p}, tips {want}", rs.dimension() == p * p and tips == want,
                   f"dim {rs.dimension()} tips {tips}", g)
    for p, q in TTP_PAIRS:
        rs = bosonization_ring(p, q)
        tips = sorted(rs.format_tip(t) for t in rs.tips)
        want = sorted([f"w^{q}", f"x^{p}", f"y^{p}", "xw", "yw", "yx"])
        report.add(f"bosonization p={p} q={q}: dim {p * p * q}", rs.dimension() == p * p * q and tips == want,
                   f"dim {rs.dimension()} tips {tips}", g)
    for params in h27_parameters():
        rs = h27_ring(*params)
        tips = sorted(rs.format_tip(t) for t in rs.tips)
        want = sorted(["w^3", "x^3", "y^3", "xw", "yw", "yx"])
        report.add("H27{}: dim 27".format(params), rs.dimension() == 27 and tips == want,
                   f"dim {rs.dimension()} tips {tips}", g)


def all_suites(report: Report) -> None:
    dimension_suite(report)
    anick_suite(report)
    complex_axioms_suite(report)
    for p, q in TTP_PAIRS:
        ttp_suite(report, p, q)
    h27_suite(report)
    cohomology_suite(report)
