"""Twisted tensor product resolutions for the Jordan-plane Nichols algebra.

``R = k<x,y>/(x^p, y^p, yx - xy - x^2/2)`` is the twisted tensor product of
``A = k[x]/(x^p)`` and ``B = k[y]/(y^p)``.  Basis tensors are exponent tuples:
``(l, r)`` stands for ``x^l (x) y^r`` in ``A (x) B`` and ``(r, l)`` for
``y^r (x) x^l`` in ``B (x) A``.

``K`` is the resolution of k over R with generators ``phi_{i,j}``; ``Y``
is the resolution over the bosonization ``R # kG`` (written in ``w = g - 1``)
with generators ``phi_{i,j,k}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Callable, Dict, Iterable, List, Mapping, Tuple

from .freealg import Word, binom_mod, rising
from .gfp import check_prime, inv_mod
from .presets import bosonization_ring, nichols_ring
from .rewrite import RewriteSystem

Tensor = Dict[tuple, int]
Poly = Dict[Word, int]
Gen = tuple


class UnsupportedCharacteristic(ValueError):
    pass


@dataclass(frozen=True)
class TwistParams:
    p: int
    q: int | None = None

    def __post_init__(self):
        check_prime(self.p)
        if self.p == 2:
            raise UnsupportedCharacteristic("twisted tensor product constructions need p odd")
        if self.q is not None and (self.q <= 0 or self.q % self.p):
            raise ValueError(f"group order q={self.q} must be a positive multiple of p={self.p}")

    @property
    def half(self) -> int:
        return inv_mod(2, self.p)


def _params(params) -> TwistParams:
    if isinstance(params, TwistParams):
        return params
    return TwistParams(int(params))


def _add(out: Tensor, key, c: int, p: int) -> None:
    v = (out.get(key, 0) + c) % p
    if v:
        out[key] = v
    else:
        out.pop(key, None)


# --- twisting maps ----------------------------------------------------------

def tau_i(i: int, r: int, ell: int, params) -> Tensor:
    """Image of ``y^r (x) x^l`` in ``A (x) B`` under the degree-``i`` twisting map."""
    P = _params(params)
    p, half = P.p, P.half
    start = ell if i % 2 == 0 else ell + 1
    out: Tensor = {}
    if r >= p or ell >= p:
        return out
    for t in range(r + 1):
        if ell + t >= p:
            break
        c = binom_mod(r, t, p) * pow(half, t, p) * rising(start, t, p)
        _add(out, (ell + t, r - t), c, p)
    return out


def tau(r: int, ell: int, params) -> Tensor:
    return tau_i(0, r, ell, params)


def tau_i_inverse(i: int, ell: int, r: int, params) -> Tensor:
    """Image of ``x^l (x) y^r`` in ``B (x) A`` under the inverse twisting map."""
    P = _params(params)
    p = P.p
    mhalf = (-P.half) % p
    start = ell if i % 2 == 0 else ell + 1
    out: Tensor = {}
    if r >= p or ell >= p:
        return out
    for t in range(r + 1):
        if ell + t >= p:
            break
        c = binom_mod(r, t, p) * pow(mhalf, t, p) * rising(start, t, p)
        _add(out, (r - t, ell + t), c, p)
    return out


def phi(i: int, ell: int, r: int, params) -> Tensor:
    """Module isomorphism ``A (x)_tau B -> P_i(A) (x) P_j(B)`` on ``x^l (x) y^r``."""
    P = _params(params)
    p = P.p
    if i % 2 == 0:
        return {(ell, r): 1} if ell < p and r < p else {}
    out: Tensor = {}
    for t in range(r + 1):
        if ell + t >= p:
            break
        c = binom_mod(r, t, p) * factorial(t) * pow(P.half, t, p)
        _add(out, (ell + t, r - t), c, p)
    return out


def phi_inverse(i: int, ell: int, r: int, params) -> Tensor:
    P = _params(params)
    p = P.p
    out: Tensor = {}
    if ell >= p or r >= p:
        return out
    _add(out, (ell, r), 1, p)
    if i % 2 and r > 0 and ell + 1 < p:
        _add(out, (ell + 1, r - 1), -r * P.half, p)
    return out


def apply_pair(elem: Mapping[tuple, int], pos: int, fn: Callable[[int, int], Mapping[tuple, int]], p: int) -> Tensor:
    """Apply a map on two adjacent tensor factors at ``pos, pos+1``, linearly."""
    out: Tensor = {}
    for key, c in elem.items():
        for mid, c2 in fn(key[pos], key[pos + 1]).items():
            _add(out, key[:pos] + tuple(mid) + key[pos + 2:], c * c2, p)
    return out


def _mult(p: int):
    def m(a: int, b: int) -> Tensor:
        return {(a + b,): 1} if a + b < p else {}
    return m


# --- the Nichols algebra and its G-action -------------------------------

class NicholsTwist:
    """R with its G-action, the element alpha, and the resolution K."""

    def __init__(self, params):
        self.params = _params(params)
        self.p = self.params.p
        self.ring: RewriteSystem = nichols_ring(self.p)
        self.x, self.y = (0,), (1,)
        self._act_cache: Dict[Tuple[int, Word], Poly] = {}

    def poly(self, text: str) -> Poly:
        return dict(self.ring.parse(text).terms)

    def mul(self, *factors: Mapping[Word, int]) -> Poly:
        out: Poly = {(): 1}
        for f in factors:
            out = self.ring.mul(out, f)
        return out

    def add(self, *terms: Tuple[int, Mapping[Word, int]]) -> Poly:
        out: Poly = {}
        for c, f in terms:
            for w, v in f.items():
                _add(out, w, c * v, self.p)
        return out

    def act(self, s: int, f: Mapping[Word, int]) -> Poly:
        """``g^s`` acting on ``f``: x is fixed and y goes to ``y + s x``."""
        p = self.p
        s %= p
        out: Poly = {}
        for w, c in f.items():
            img = self._act_cache.get((s, w))
            if img is None:
                img = {(): 1}
                for letter in w:
                    gen = {(0,): 1} if letter == 0 else ({(1,): 1, (0,): s} if s else {(1,): 1})
                    img = self.ring.mul(img, gen)
                self._act_cache[(s, w)] = img
            for w2, c2 in img.items():
                _add(out, w2, c * c2, p)
        return out

    @property
    def alpha(self) -> Poly:
        return alpha(self.params)

    def alpha_orbit_sum(self, s: int) -> Poly:
        """``(g^{s-1} + ... + g + 1)`` acting on alpha, for ``s >= 0``."""
        out: Poly = {}
        a = self.alpha
        for t in range(s):
            for w, c in self.act(t, a).items():
                _add(out, w, c, self.p)
        return out

    def alpha_inverse_orbit_sum(self, s: int) -> Poly:
        """``(g^{-s} + ... + g^{-1})`` acting on alpha, for ``s >= 1``."""
        out: Poly = {}
        a = self.alpha
        for t in range(1, s + 1):
            for w, c in self.act(-t, a).items():
                _add(out, w, c, self.p)
        return out

    # K resolution
    def generators(self, n: int) -> List[Gen]:
        return [(i, n - i) for i in range(n + 1)]

    def differential(self, gen: Gen) -> Dict[Gen, Poly]:
        return k_differential(gen[0], gen[1], self.params)

    def g_action(self, s: int, gen: Gen) -> Dict[Gen, Poly]:
        return g_action(s, gen, self.params)

    def act_element(self, s: int, elem: Mapping[Gen, Mapping[Word, int]]) -> Dict[Gen, Poly]:
        """``g^s`` on a K-element: acts on coefficients and on generators."""
        out: Dict[Gen, Poly] = {}
        for gen, coef in elem.items():
            c = self.act(s, coef)
            for gen2, c2 in self.g_action(s, gen).items():
                _module_add(out, gen2, self.ring.mul(c, c2), self.p)
        return out


def _module_add(out: Dict[Gen, Poly], gen: Gen, poly: Mapping[Word, int], p: int, c: int = 1) -> None:
    if any(i < 0 for i in gen):
        return
    cur = out.setdefault(gen, {})
    for w, v in poly.items():
        _add(cur, w, c * v, p)
    if not cur:
        del out[gen]


@lru_cache(maxsize=None)
def nichols_twist(p: int) -> NicholsTwist:
    return NicholsTwist(TwistParams(p))


@lru_cache(maxsize=None)
def _alpha(p: int) -> Tuple[Tuple[Word, int], ...]:
    P = TwistParams(p)
    ring = nichols_ring(p)
    out: Poly = {(1,) * (p - 2): -1 % p}
    for i in range(1, p - 1):
        c = (-1) ** (i + 1) * factorial(i + 1) * pow(P.half, i + 1, p)
        _add(out, (0,) * i + (1,) * (p - 2 - i), c, p)
    return tuple(sorted(ring.nf_dict(out).items()))


def alpha(params) -> Poly:
    """The element ``-y^{p-2} + sum_i (-1)^{i+1} (i+1)!/2^{i+1} x^i y^{p-2-i}`` of R."""
    return dict(_alpha(_params(params).p))


def k_differential(i: int, j: int, params) -> Dict[Gen, Poly]:
    """Differential of ``phi_{i,j}`` in K; generators with a negative index are dropped."""
    P = _params(params)
    p, half = P.p, P.half
    if i + j < 1 or i < 0 or j < 0:
        raise ValueError(f"no differential on phi_({i},{j})")
    x = (0,)
    y = (1,)
    xpm1 = {x * (p - 1): 1}
    if i % 2 == 0 and j % 2 == 0:
        a, b = xpm1, {y * (p - 1): 1}
    elif i % 2 == 0:
        a, b = xpm1, {y: 1}
    elif j % 2 == 0:
        a = {x: 1}
        b = {y * (p - 1): -1 % p, x + y * (p - 2): (-half) % p}
    else:
        a = {x: 1}
        b = {y: -1 % p, x: half}
    out: Dict[Gen, Poly] = {}
    if i >= 1:
        out[(i - 1, j)] = a
    if j >= 1:
        out[(i, j - 1)] = b
    return out


def g_action(s: int, gen: Gen, params) -> Dict[Gen, Poly]:
    """``g^s phi_{i,j}``; negative ``s`` uses the inverse-power formula."""
    P = _params(params)
    p = P.p
    i, j = gen
    tw = nichols_twist(p)
    out: Dict[Gen, Poly] = {(i, j): {(): 1}}
    if i % 2 == 1 or j == 0:
        return out
    if j % 2 == 1:
        coef = {(): s % p} if s % p else {}
    elif s >= 0:
        coef = tw.alpha_orbit_sum(s)
    else:
        coef = {w: -c % p for w, c in tw.alpha_inverse_orbit_sum(-s).items()}
    if coef:
        out[(i + 1, j - 1)] = coef
    return out


# --- the bosonization and the resolution Y --------------------------------

class BosonizationTwist:
    """Resolution Y of k over R # kG with coefficients in the w, x, y presentation."""

    def __init__(self, params: TwistParams):
        if params.q is None:
            raise ValueError("the bosonization needs a group order q")
        self.params = params
        self.p, self.q = params.p, params.q
        self.ring: RewriteSystem = bosonization_ring(self.p, self.q)
        self.nichols = nichols_twist(self.p)
        p, q = self.p, self.q
        ring = self.ring
        one = {(): 1}
        g = {(): 1, (0,): 1}
        gpow = [one]
        for _ in range(1, q):
            gpow.append(ring.mul(gpow[-1], g))
        self.g = g
        self.w = {(0,): 1}
        self.norm: Poly = {}
        self.snorm: Poly = {}
        for s in range(q):
            for w, c in gpow[s].items():
                _add(self.norm, w, c, p)
                _add(self.snorm, w, s * c, p)
        self.alpha_g = ring.mul(self.embed(self.nichols.alpha), g)
        self.alpha_sum: Poly = {}
        for s in range(1, q):
            term = ring.mul(self.embed(self.nichols.alpha_orbit_sum(s)), gpow[s])
            for w, c in term.items():
                _add(self.alpha_sum, w, c, p)
        self._dcache: Dict[Gen, Dict[Gen, Poly]] = {}

    def embed(self, f: Mapping[Word, int]) -> Poly:
        """R -> R # kG on normal words ``x^a y^b``."""
        return self.ring.nf_dict({tuple(l + 1 for l in w): c for w, c in f.items()})

    def generators(self, n: int) -> List[Gen]:
        return [(i, j, n - i - j) for i in range(n + 1) for j in range(n - i + 1)]

    def differential(self, gen: Gen) -> Dict[Gen, Poly]:
        got = self._dcache.get(gen)
        if got is None:
            got = self._differential(*gen)
            self._dcache[gen] = got
        return got

    def _differential(self, i: int, j: int, k: int) -> Dict[Gen, Poly]:
        if min(i, j, k) < 0 or i + j + k < 1:
            raise ValueError(f"no differential on phi_({i},{j},{k})")
        p = self.p
        out: Dict[Gen, Poly] = {}
        if i + j >= 1:
            for (i2, j2), c in k_differential(i, j, self.params).items():
                _module_add(out, (i2, j2, k), self.embed(c), p)
        if k == 0:
            return out
        sign = (-1) ** (i + j)
        low, shifted = (i, j, k - 1), (i + 1, j - 1, k - 1)
        if k % 2 == 1:
            _module_add(out, low, self.w, p, sign)
            if i % 2 == 0 and j % 2 == 1:
                _module_add(out, shifted, self.g, p, -sign)
            elif i % 2 == 0 and j % 2 == 0:
                _module_add(out, shifted, self.alpha_g, p, -sign)
        else:
            _module_add(out, low, self.norm, p, sign)
            if i % 2 == 0 and j % 2 == 1:
                _module_add(out, shifted, self.snorm, p, -sign)
            elif i % 2 == 0 and j % 2 == 0:
                _module_add(out, shifted, self.alpha_sum, p, -sign)
        return out


@lru_cache(maxsize=None)
def bosonization_twist(p: int, q: int) -> BosonizationTwist:
    return BosonizationTwist(TwistParams(p, q))


def y_differential(i: int, j: int, k: int, params: TwistParams) -> Dict[Gen, Poly]:
    return bosonization_twist(params.p, params.q).differential((i, j, k))


# --- free complexes over a rewrite system -----------------------------------

class TwistedComplex:
    """Adapter giving K or Y the interface used by the cohomology code."""

    def __init__(self, source, ring: RewriteSystem):
        self.source = source
        self.ring = ring
        self.p = ring.p

    def generators(self, n: int) -> List[Gen]:
        return self.source.generators(n)

    def basis(self, n: int) -> List[str]:
        return ["phi_" + ",".join(map(str, g)) for g in self.generators(n)]

    def differential(self, gen: Gen) -> Dict[Gen, Poly]:
        return self.source.differential(gen)

    def augmented_boundary(self, n: int, idx: int) -> Dict[int, int]:
        gen = self.generators(n)[idx]
        index = {g: t for t, g in enumerate(self.generators(n - 1))}
        out = {}
        for g2, c in self.differential(gen).items():
            e = c.get((), 0) % self.p
            if e:
                out[index[g2]] = e
        return out

    def apply_d(self, elem: Mapping[Gen, Mapping[Word, int]]) -> Dict[Gen, Poly]:
        out: Dict[Gen, Poly] = {}
        for gen, coef in elem.items():
            if sum(gen) == 0:
                continue
            for g2, c2 in self.differential(gen).items():
                _module_add(out, g2, self.ring.mul(coef, c2), self.p)
        return out

    def d_squared_defects(self, max_degree: int) -> List[Gen]:
        bad = []
        for n in range(2, max_degree + 1):
            for gen in self.generators(n):
                if self.apply_d(self.differential(gen)):
                    bad.append(gen)
        return bad

    def matrix(self, n: int):
        """``d_n`` as a GF(p) matrix on vector-space bases (normal word times generator)."""
        import numpy as np

        nw = self.ring.normal_words()
        rows = {(w, g): t for t, (g, w) in enumerate((g, w) for g in self.generators(n - 1) for w in nw)}
        cols = [(g, w) for g in self.generators(n) for w in nw]
        m = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for col, (g, w) in enumerate(cols):
            for g2, c in self.differential(g).items():
                for w2, v in self.ring.mul({w: 1}, c).items():
                    m[rows[(w2, g2)], col] = v
        return m


def k_complex(p: int) -> TwistedComplex:
    tw = nichols_twist(p)
    return TwistedComplex(tw, tw.ring)


def y_complex(p: int, q: int) -> TwistedComplex:
    bt = bosonization_twist(p, q)
    return TwistedComplex(bt, bt.ring)


# --- identity verification ------------------------------------------------

@dataclass
class Check:
    family: str
    name: str
    passed: bool
    cases: int
    detail: str = ""


def _basis_pairs(p: int) -> Iterable[Tuple[int, int]]:
    return ((a, b) for a in range(p) for b in range(p))


def _check(family: str, name: str, failures: List[str], cases: int) -> Check:
    detail = "; ".join(failures[:3]) + (f" (+{len(failures) - 3} more)" if len(failures) > 3 else "")
    return Check(family, name, not failures, cases, detail)


def _nichols_checks(tw: NicholsTwist) -> List[Check]:
    p = tw.p
    half = tw.params.half
    ring = tw.ring
    x, y = {(0,): 1}, {(1,): 1}
    xy = {(0,): 1, (1,): 1}
    out: List[Check] = []

    fails, cases = [], 0
    for ell in range(p):
        cases += 1
        lhs = tw.mul(y, {(0,) * ell: 1})
        rhs = tw.add((1, {(0,) * ell + (1,): 1}), (ell * half, {(0,) * (ell + 1): 1}))
        if lhs != ring.nf_dict(rhs):
            fails.append(f"l={ell}")
    out.append(_check("i", "y x^l expansion", fails, cases))

    fails, cases = [], 0
    power: Poly = {(): 1}
    for n in range(1, 2 * p + 1):
        cases += 1
        power = tw.mul(power, xy)
        rhs: Poly = {}
        for i in range(n + 1):
            c = binom_mod(n, i, p) * factorial(i + 1) * pow(half, i, p)
            _add(rhs, (0,) * i + (1,) * (n - i), c, p)
        if power != ring.nf_dict(rhs):
            fails.append(f"n={n}")
    out.append(_check("ii", "(x+y)^n expansion", fails, cases))

    a = tw.alpha
    xyp = {(): 1}
    for _ in range(p - 2):
        xyp = tw.mul(xyp, xy)
    xyp2, xyp = xyp, tw.mul(xyp, xy)
    ypm1 = {(1,) * (p - 1): 1}
    ypm2 = {(1,) * (p - 2): 1}
    identities = {
        "(a) x alpha": (tw.mul(x, a), ring.nf_dict(tw.add(
            (1, xyp), (-1, ypm1), (half, tw.mul(x, tw.add((1, xyp2), (-1, ypm2))))))),
        "(b) (x+y) alpha": (tw.mul(xy, a), ring.nf_dict(tw.add((-1, ypm1), (-half, tw.mul(x, ypm2))))),
        "(c) alpha x": (tw.mul(a, x), tw.add((1, xyp), (-1, ypm1))),
        "(d) alpha (y - x/2)": (tw.mul(a, tw.add((1, y), (-half, x))), tw.add((-1, xyp))),
    }
    fails = [name for name, (l, r) in identities.items() if l != r]
    out.append(_check("iii", "alpha identities (a)-(d)", fails, len(identities)))
    return out


def _orbit_check(tw: NicholsTwist, q: int) -> Check:
    total = tw.alpha_orbit_sum(q)
    return _check("iv", "sum of g^s alpha over s < q vanishes", [f"got {total}"] if total else [], q)


def _twist_axiom(params: TwistParams) -> Check:
    p = params.p
    m = _mult(p)
    t0 = lambda r, l: tau(r, l, params)
    fails, cases = [], 0
    for r1 in range(p):
        for r2 in range(p):
            for l1 in range(p):
                for l2 in range(p):
                    cases += 1
                    e = {(r1, r2, l1, l2): 1}
                    lhs = apply_pair(apply_pair(apply_pair(e, 0, m, p), 1, m, p), 0, t0, p)
                    rhs = apply_pair(e, 1, t0, p)
                    rhs = apply_pair(apply_pair(rhs, 0, t0, p), 2, t0, p)
                    rhs = apply_pair(rhs, 1, t0, p)
                    rhs = apply_pair(apply_pair(rhs, 0, m, p), 1, m, p)
                    if lhs != rhs:
                        fails.append(f"y^{r1} y^{r2} x^{l1} x^{l2}")
    return _check("v", "tau satisfies the twisting axiom", fails, cases)


def _compatibility(params: TwistParams) -> Check:
    p = params.p
    m = _mult(p)
    t0 = lambda r, l: tau(r, l, params)
    fails, cases = [], 0
    for i in (0, 1):
        ti = lambda r, l, i=i: tau_i(i, r, l, params)
        for a in range(p):
            for b in range(p):
                for c in range(p):
                    cases += 2
                    # B (x) B (x) M
                    e = {(a, b, c): 1}
                    lhs = apply_pair(apply_pair(e, 0, m, p), 0, ti, p)
                    rhs = apply_pair(apply_pair(apply_pair(e, 1, ti, p), 0, ti, p), 1, m, p)
                    if lhs != rhs:
                        fails.append(f"i={i} first (y^{a}, y^{b}, x^{c})")
                    # B (x) A (x) M
                    lhs = apply_pair(apply_pair(e, 1, m, p), 0, ti, p)
                    rhs = apply_pair(apply_pair(apply_pair(e, 0, t0, p), 1, ti, p), 0, m, p)
                    if lhs != rhs:
                        fails.append(f"i={i} second (y^{a}, x^{b}, x^{c})")
    return _check("vi", "tau_i compatibility equations", fails, cases)


def _ladder(params: TwistParams) -> Check:
    p = params.p

    def right(e: int):
        return lambda r, l: {(r, l + e): 1} if l + e < p else {}

    def left(e: int):
        return lambda l, r: {(l + e, r): 1} if l + e < p else {}

    fails, cases = [], 0
    for r, ell in _basis_pairs(p):
        for i_src, e in ((1, 1), (0, p - 1)):
            cases += 1
            t_src = lambda a, b: tau_i(i_src, a, b, params)
            t_dst = lambda a, b: tau_i(1 - i_src, a, b, params)
            base = {(r, ell): 1}
            lhs = apply_pair(apply_pair(base, 0, right(e), p), 0, t_dst, p)
            rhs = apply_pair(apply_pair(base, 0, t_src, p), 0, left(e), p)
            if lhs != rhs:
                fails.append(f"parity {i_src}, y^{r} x^{ell}")
    return _check("vii", "tau_i ladder squares commute", fails, cases)


def _round_trips(params: TwistParams) -> Check:
    p = params.p
    fails, cases = [], 0
    for i in (0, 1):
        for a, b in _basis_pairs(p):
            cases += 4
            fwd = lambda r, l: tau_i(i, r, l, params)
            back = lambda l, r: tau_i_inverse(i, l, r, params)
            if apply_pair(apply_pair({(b, a): 1}, 0, fwd, p), 0, back, p) != {(b, a): 1}:
                fails.append(f"tau_{i}^-1 tau_{i} at y^{b} x^{a}")
            if apply_pair(apply_pair({(a, b): 1}, 0, back, p), 0, fwd, p) != {(a, b): 1}:
                fails.append(f"tau_{i} tau_{i}^-1 at x^{a} y^{b}")
            f = lambda l, r: phi(i, l, r, params)
            g = lambda l, r: phi_inverse(i, l, r, params)
            if apply_pair(apply_pair({(a, b): 1}, 0, f, p), 0, g, p) != {(a, b): 1}:
                fails.append(f"phi^-1 phi (i={i}) at x^{a} y^{b}")
            if apply_pair(apply_pair({(a, b): 1}, 0, g, p), 0, f, p) != {(a, b): 1}:
                fails.append(f"phi phi^-1 (i={i}) at x^{a} y^{b}")
    return _check("round-trip", "tau_i and phi are mutually inverse bijections", fails, cases)


def _phi_module_map(params: TwistParams) -> Check:
    """phi(z z') = z . phi(z') where R acts on A (x) B through tau_i."""
    p = params.p
    m = _mult(p)
    t0 = lambda r, l: tau(r, l, params)
    fails, cases = [], 0
    for i in (0, 1):
        ti = lambda r, l, i=i: tau_i(i, r, l, params)
        f = lambda l, r, i=i: phi(i, l, r, params)
        for a, b in _basis_pairs(p):
            for c, d in _basis_pairs(p):
                cases += 1
                # z z' in A (x)_tau B, then phi
                prod = apply_pair({(a, b, c, d): 1}, 1, t0, p)
                prod = apply_pair(apply_pair(prod, 0, m, p), 1, m, p)
                lhs = apply_pair(prod, 0, f, p)
                # z acting on phi(z') via tau_i
                act = apply_pair({(a, b, c, d): 1}, 2, f, p)
                act = apply_pair(act, 1, ti, p)
                rhs = apply_pair(apply_pair(act, 0, m, p), 1, m, p)
                if lhs != rhs:
                    fails.append(f"i={i} (x^{a}y^{b})(x^{c}y^{d})")
    return _check("round-trip", "phi is an R-module map", fails, cases)


def _k_derivation(tw: NicholsTwist) -> Check:
    """The K differential equals d_i (x) 1 + (-1)^i 1 (x) d_j transported through phi^-1."""
    p = tw.p
    fails, cases = [], 0
    for i in range(4):
        for j in range(4):
            if i + j == 0:
                continue
            cases += 1
            want: Dict[Gen, Poly] = {}
            if i:
                e = 1 if i % 2 else p - 1
                want[(i - 1, j)] = {(0,) * e: 1}
            if j:
                e = 1 if j % 2 else p - 1
                coef: Poly = {}
                for (l, r), c in phi_inverse(i, 0, e, tw.params).items():
                    _add(coef, (0,) * l + (1,) * r, (-1) ** i * c, p)
                want[(i, j - 1)] = coef
            if want != k_differential(i, j, tw.params):
                fails.append(f"phi_{i},{j}")
    return _check("ix", "K differential matches the transported tensor differential", fails, cases)


def _equivariance(tw: NicholsTwist, q: int, max_degree: int = 8) -> List[Check]:
    p = tw.p
    K = k_complex(p)
    fails, cases = [], 0
    for n in range(1, max_degree + 1):
        for gen in tw.generators(n):
            for s in range(q):
                cases += 1
                lhs = K.apply_d(tw.g_action(s, gen))
                rhs = tw.act_element(s, tw.differential(gen))
                if lhs != rhs:
                    fails.append(f"s={s} phi_{gen}")
    equi = _check("viii", "K is G-equivariant", fails, cases)

    fails, cases = [], 0
    for n in range(max_degree + 1):
        for gen in tw.generators(n):
            cases += 1
            elem = {gen: {(): 1}}
            for s in range(1, q + 1):
                elem = tw.act_element(1, elem)
                want = {gen: {(): 1}} if s == q else g_action(s, gen, tw.params)
                if elem != want:
                    fails.append(f"g^{s} phi_{gen}")
                    break
                if s < q and g_action(s - q, gen, tw.params) != want:
                    fails.append(f"g^{s - q} phi_{gen}")
    well = _check("viii", "iterated g matches g^s, g^-s formula, and g^q acts trivially", fails, cases)
    return [equi, well]


def _epsilon_claim(bt: BosonizationTwist, max_degree: int) -> Check:
    fails, cases = [], 0
    for n in range(1, max_degree + 1):
        for (i, j, k) in bt.generators(n):
            cases += 1
            for gen, c in bt.differential((i, j, k)).items():
                eps = c.get((), 0) % bt.p
                special = (i % 2 == 0 and j % 2 == 1 and k % 2 == 1
                           and gen == (i + 1, j - 1, k - 1))
                # -g carries the overall sign (-1)^(i+j) = -1, so it augments to +1
                if special and eps != 1:
                    fails.append(f"phi_{i},{j},{k} -> {gen}: eps {eps}")
                if not special and eps:
                    fails.append(f"phi_{i},{j},{k} -> {gen}: eps {eps}")
    return _check("ix", "Y coefficients lie in the augmentation ideal except the g term", fails, cases)


def verify_identities(params: TwistParams, max_degree: int = 10, equivariance_degree: int = 8) -> List[Check]:
    """Run every identity family for ``(p, q)``; each entry is one pass/fail verdict."""
    if params.q is None:
        raise ValueError("verify_identities needs a group order q")
    tw = nichols_twist(params.p)
    bt = bosonization_twist(params.p, params.q)
    checks = _nichols_checks(tw)
    checks.append(_orbit_check(tw, params.q))
    checks.append(_twist_axiom(params))
    checks.append(_compatibility(params))
    checks.append(_ladder(params))
    checks.extend(_equivariance(tw, params.q, equivariance_degree))
    checks.append(_k_derivation(tw))
    for label, cx in (("K", k_complex(params.p)), ("Y", y_complex(params.p, params.q))):
        bad = cx.d_squared_defects(max_degree)
        checks.append(_check("ix", f"d^2 = 0 on {label} through degree {max_degree}",
                             [str(b) for b in bad], sum(len(cx.generators(n)) for n in range(2, max_degree + 1))))
    checks.append(_epsilon_claim(bt, max_degree))
    checks.append(_round_trips(params))
    checks.append(_phi_module_map(params))
    return checks
