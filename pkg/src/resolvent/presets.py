"""The four algebra families used throughout: presentations in w < x < y order."""

from __future__ import annotations

from functools import lru_cache

from .gfp import check_prime
from .rewrite import Presentation, RewriteSystem, complete

# Conjugation by g = w + 1 satisfies g y = (x + y) g, i.e. the group acts by
# y -> x + y on the left.  This is the convention under which the twisted
# tensor product differentials on the bosonization square to zero.
BOSONIZATION_CROSS = "y*w - w*y + w*x + x"


def nichols(p: int) -> Presentation:
    check_prime(p)
    if p == 2:
        raise ValueError("the Jordan-type Nichols algebra needs odd characteristic")
    return Presentation.from_strings(
        ["x", "y"], p, [f"x^{p}", f"y^{p}", "y*x - x*y - (1/2)*x^2"], name=f"nichols(p={p})")


def bosonization(p: int, q: int) -> Presentation:
    check_prime(p)
    if p == 2:
        raise ValueError("the Jordan-type Nichols algebra needs odd characteristic")
    if q <= 0 or q % p:
        raise ValueError(f"group order q={q} must be a positive multiple of p={p}")
    return Presentation.from_strings(
        ["w", "x", "y"], p,
        [f"w^{q}", f"x^{p}", f"y^{p}", "y*x - x*y - (1/2)*x^2", "x*w - w*x", BOSONIZATION_CROSS],
        name=f"bosonization(p={p},q={q})")


H27_RELATIONS = (
    "w^3",
    "x^3 - e*x",
    "y^3 + e*y^2 + (m*e - t - m^2)*y",
    "y*w - w*y - w*x - x + (m - e)*(w^2 + w)",
    "x*w - w*x - e*(w^2 + w)",
    "y*x - x*y + x^2 - (m + e)*x - e*y + t*(w^2 - w)",
)


def h27(eps: int, mu: int, tau: int) -> Presentation:
    """The 27-dimensional liftings over GF(3) with ``w = g - 1``."""
    if eps not in (0, 1):
        raise ValueError(f"eps must be 0 or 1, got {eps}")
    params = {"e": eps, "m": mu % 3, "t": tau % 3}
    return Presentation.from_strings(["w", "x", "y"], 3, H27_RELATIONS, params,
                                     name=f"H27(eps={eps},mu={mu % 3},tau={tau % 3})")


def h27_parameters():
    """All 18 parameter tuples (eps, mu, tau) in {0,1} x GF(3) x GF(3)."""
    return [(e, m, t) for e in (0, 1) for m in range(3) for t in range(3)]


def truncated(m1: int, m2: int, m3: int, p: int = 3) -> Presentation:
    for m in (m1, m2, m3):
        if m < 2:
            raise ValueError("truncation exponents must be at least 2")
    return Presentation.from_strings(
        ["w", "x", "y"], p,
        [f"w^{m1}", f"x^{m2}", f"y^{m3}", "x*w - w*x", "y*w - w*y", "y*x - x*y"],
        name=f"trunc({m1},{m2},{m3};p={p})")


@lru_cache(maxsize=None)
def nichols_ring(p: int) -> RewriteSystem:
    return complete(nichols(p))


@lru_cache(maxsize=None)
def bosonization_ring(p: int, q: int) -> RewriteSystem:
    return complete(bosonization(p, q))


@lru_cache(maxsize=None)
def h27_ring(eps: int, mu: int, tau: int) -> RewriteSystem:
    return complete(h27(eps, mu % 3, tau % 3))


@lru_cache(maxsize=None)
def truncated_ring(m1: int, m2: int, m3: int, p: int = 3) -> RewriteSystem:
    return complete(truncated(m1, m2, m3, p))
