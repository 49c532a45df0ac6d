"""Explicit low-degree Anick differentials for the 27-dimensional liftings H(e, m, t).

Each table entry is ``(scalar, coefficient word, chain word)`` where ``scalar``
is a function of the parameters.  The checker compares these with the
differentials computed by :class:`~resolvent.anick.AnickResolution`.
"""

from __future__ import annotations

from typing import Callable, Dict, List, Tuple

from .anick import AnickResolution
from .presets import h27_parameters, h27_ring

Scalar = Callable[[int, int, int], int]
Entry = Tuple[Scalar, str, str]


def _c(k: int) -> Scalar:
    return lambda e, m, t: k


D2_TABLE: Dict[str, List[Entry]] = {
    "w^3": [(_c(1), "w^2", "w")],
    "x^3": [(_c(1), "x^2", "x"), (lambda e, m, t: -e, "1", "x")],
    "y^3": [(_c(1), "y^2", "y"), (lambda e, m, t: e, "y", "y"),
            (lambda e, m, t: m * e - t - m * m, "1", "y")],
    "xw": [(_c(1), "x", "w"), (_c(-1), "w", "x"), (lambda e, m, t: -e, "w", "w"),
           (lambda e, m, t: -e, "1", "w")],
    "yw": [(_c(1), "y", "w"), (_c(-1), "w", "y"), (_c(-1), "w", "x"), (_c(-1), "1", "x"),
           (lambda e, m, t: m - e, "w", "w"), (lambda e, m, t: m - e, "1", "w")],
    "yx": [(_c(1), "y", "x"), (_c(-1), "x", "y"), (_c(1), "x", "x"),
           (lambda e, m, t: -(m + e), "1", "x"), (lambda e, m, t: -e, "1", "y"),
           (lambda e, m, t: t, "w", "w"), (lambda e, m, t: -t, "1", "w")],
}

D3_TABLE: Dict[str, List[Entry]] = {
    "w^4": [(_c(1), "w", "w^3")],
    "x^4": [(_c(1), "x", "x^3")],
    "y^4": [(_c(1), "y", "y^3")],
    "xw^3": [(_c(1), "x", "w^3"), (_c(-1), "w^2", "xw")],
    "x^3w": [(_c(1), "x^2", "xw"), (_c(1), "w", "x^3"), (lambda e, m, t: e, "wx", "xw"),
             (lambda e, m, t: e, "x", "xw"), (lambda e, m, t: e, "w", "xw")],
    "yw^3": [(_c(1), "y", "w^3"), (_c(-1), "w^2", "yw"), (_c(1), "w^2", "xw"), (_c(1), "w", "xw")],
    "yxw": [(_c(1), "y", "xw"), (_c(-1), "x", "yw"), (_c(1), "w", "yx"),
            (lambda e, m, t: e, "w", "yw"), (_c(1), "x", "xw"), (lambda e, m, t: m + e, "w", "xw")],
    "y^3w": [(_c(1), "y^2", "yw"), (_c(1), "w", "y^3"), (_c(1), "wy", "yx"), (_c(1), "wx", "yx"),
             (lambda e, m, t: e - m, "wy", "yw"), (lambda e, m, t: m - e, "wx", "yw"),
             (lambda e, m, t: -t, "w^2", "yw"), (_c(1), "y", "yx"),
             (lambda e, m, t: -(e + m), "y", "yw"), (lambda e, m, t: t, "w^2", "xw"),
             (_c(1), "x", "yx"), (lambda e, m, t: m - e, "x", "yw"),
             (lambda e, m, t: m * m - e * m, "w", "yw"), (lambda e, m, t: t, "w", "xw")],
    "yx^3": [(_c(1), "y", "x^3"), (_c(-1), "x^2", "yx"), (lambda e, m, t: t, "wx", "xw"),
             (lambda e, m, t: e, "x", "yx"), (lambda e, m, t: -t, "x", "xw"),
             (lambda e, m, t: e * t, "w", "xw")],
    "y^3x": [(_c(1), "y^2", "yx"), (_c(1), "x", "y^3"), (_c(-1), "xy", "yx"),
             (lambda e, m, t: -t, "wx", "yw"), (lambda e, m, t: -t, "wy", "yw"),
             (lambda e, m, t: t, "w^2", "yx"), (lambda e, m, t: t, "wx", "xw"),
             (lambda e, m, t: e * t, "w^2", "yw"), (lambda e, m, t: e * t + m * t, "w^2", "xw"),
             (lambda e, m, t: m, "y", "yx"), (lambda e, m, t: t, "y", "yw"),
             (lambda e, m, t: -m, "x", "yx"), (lambda e, m, t: t, "x", "xw"),
             (lambda e, m, t: t, "w", "yx"), (lambda e, m, t: e * t + m * t, "w", "yw"),
             (lambda e, m, t: e * t, "w", "xw")],
}


def expected(res: AnickResolution, n: int, chain_word: str, params: Tuple[int, int, int]):
    table = {2: D2_TABLE, 3: D3_TABLE}[n]
    e, m, t = params
    return res.element(n - 1, {(r, u): f(e, m, t) for f, r, u in table[chain_word]})


def check_tables(params: Tuple[int, int, int]) -> List[Tuple[int, str, bool, str]]:
    """``[(degree, chain, agrees, computed value)]`` for every tip and 3-chain."""
    res = AnickResolution(h27_ring(*params))
    out = []
    for n in (2, 3):
        table = {2: D2_TABLE, 3: D3_TABLE}[n]
        if sorted(table) != sorted(res.basis(n)):
            raise AssertionError(f"chain set {res.basis(n)} differs from the table keys")
        for word in res.basis(n):
            got = res.differential(n, word)
            out.append((n, word, got == expected(res, n, word, params), str(got)))
    return out


def permanent_cocycles(params: Tuple[int, int, int]) -> Dict[str, bool]:
    """Whether ``d_3^*`` kills the duals of the tips w^3, x^3 and y^3."""
    res = AnickResolution(h27_ring(*params))
    targets = {w: res.chain_index(2, res.find_chain(2, w)) for w in ("w^3", "x^3", "y^3")}
    out = {w: True for w in targets}
    for ci in range(len(res.chains(3))):
        aug = res.augmented_boundary(3, ci)
        for w, ti in targets.items():
            if aug.get(ti, 0):
                out[w] = False
    return out


def all_parameters() -> List[Tuple[int, int, int]]:
    return h27_parameters()
