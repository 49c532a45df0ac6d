"""Cohomology against the trivial module: coboundary matrices, ranks, Betti numbers,
index-shift chain maps and even-degree cup products."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, List, Mapping, Sequence, Tuple

import numpy as np

from .anick import AnickResolution, truncated_index
from .presets import truncated_ring
from .ttp import Gen, TwistedComplex, _module_add, y_complex

Triple = Tuple[int, int, int]


def rank_mod_p(matrix, p: int) -> int:
    """Rank over GF(p) by Gaussian elimination (pivot = first nonzero in the column)."""
    m = np.array(matrix, dtype=np.int64) % p
    if m.size == 0:
        return 0
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(m[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        m[rank] = (m[rank] * pow(int(m[rank, c]), -1, p)) % p
        col = m[:, c].copy()
        col[rank] = 0
        mask = col != 0
        if mask.any():
            m[mask] = (m[mask] - np.outer(col[mask], m[rank])) % p
        rank += 1
    return rank


def dual_differential(res, n: int) -> np.ndarray:
    """Matrix of ``d^*: Hom(C_n, k) -> Hom(C_{n+1}, k)`` in the dual bases.

    Column ``a`` is the dual of the ``a``-th degree-``n`` generator; row ``b`` the dual
    of the ``b``-th degree-``n+1`` generator; the entry is the augmentation of the
    coefficient of generator ``a`` in ``d(generator b)``.
    """
    src = len(res.basis(n))
    dst = len(res.basis(n + 1))
    m = np.zeros((dst, src), dtype=np.int64)
    for b in range(dst):
        for a, c in res.augmented_boundary(n + 1, b).items():
            m[b, a] = c
    return m


class CochainComplex:
    """``Hom(P_n, k)`` with coboundary matrices cached per degree."""

    def __init__(self, res):
        self.res = res
        self.p = res.p
        self._mats: Dict[int, np.ndarray] = {}
        self._ranks: Dict[int, int] = {}

    def dimension(self, n: int) -> int:
        return len(self.res.basis(n)) if n >= 0 else 0

    def coboundary(self, n: int) -> np.ndarray:
        if n not in self._mats:
            self._mats[n] = dual_differential(self.res, n)
        return self._mats[n]

    def rank(self, n: int) -> int:
        if n < 0:
            return 0
        if n not in self._ranks:
            self._ranks[n] = rank_mod_p(self.coboundary(n), self.p)
        return self._ranks[n]

    def betti(self, n: int) -> int:
        return self.dimension(n) - self.rank(n) - self.rank(n - 1)

    def squares_to_zero(self, n: int) -> bool:
        return not ((self.coboundary(n + 1) @ self.coboundary(n)) % self.p).any()


def betti(res, n: int) -> int:
    return CochainComplex(res).betti(n)


def betti_numbers(res, max_degree: int) -> List[int]:
    cc = CochainComplex(res)
    return [cc.betti(n) for n in range(max_degree + 1)]


def exactness_defects(res: AnickResolution, max_degree: int) -> List[int]:
    """Degrees ``n`` where ``rank d_n + rank d_{n+1} != dim A * |C_n|`` (``n >= 1``)."""
    dim = res.rs.dimension()
    bad = []
    for n in range(1, max_degree + 1):
        lhs = rank_mod_p(res.matrix(n), res.p) + rank_mod_p(res.matrix(n + 1), res.p)
        if lhs != dim * len(res.chains(n)):
            bad.append(n)
    return bad


# --- index-shift chain maps on Y ------------------------------------------

@dataclass(frozen=True)
class IndexShiftMap:
    """Degree-lowering map on generators ``phi_{i,j,k} -> sign * phi_{i-a,j-b,k-c}``."""

    shift: Triple
    sign: Callable[[Gen], int] | None = None
    name: str = ""

    def image(self, gen: Gen) -> Tuple[Gen, int] | None:
        tgt = tuple(g - s for g, s in zip(gen, self.shift))
        if min(tgt) < 0:
            return None
        c = 1 if self.sign is None else self.sign(gen)
        return (tgt, c) if c else None

    def apply(self, elem: Mapping[Gen, Mapping], p: int) -> Dict[Gen, Dict]:
        out: Dict[Gen, Dict] = {}
        for gen, coef in elem.items():
            img = self.image(gen)
            if img is not None:
                _module_add(out, img[0], coef, p, img[1])
        return out

    def then(self, other: "IndexShiftMap") -> "IndexShiftMap":
        """``other`` after ``self`` (both unsigned)."""
        if self.sign or other.sign:
            raise ValueError("only unsigned shift maps compose")
        return IndexShiftMap(tuple(a + b for a, b in zip(self.shift, other.shift)),
                             name=f"{other.name}{self.name}")


XI_X = IndexShiftMap((2, 0, 0), name="xi_x")
XI_Y = IndexShiftMap((0, 2, 0), name="xi_y")
XI_G = IndexShiftMap((0, 0, 2), name="xi_g")
ZERO_MAP = IndexShiftMap((0, 0, 0), sign=lambda gen: 0, name="zero")
ILL_SIGNED_XI_X = IndexShiftMap((2, 0, 0), sign=lambda gen: (-1) ** gen[0], name="(-1)^i xi_x")


def verify_chain_map(f: IndexShiftMap, res: TwistedComplex, max_degree: int) -> bool:
    return not chain_map_defects(f, res, max_degree)


def chain_map_defects(f: IndexShiftMap, res: TwistedComplex, max_degree: int) -> List[Gen]:
    """Generators where ``f d != d f``; ``f`` is the identity on coefficients."""
    bad = []
    one = {(): 1}
    for n in range(1, max_degree + 1):
        for gen in res.generators(n):
            lhs = f.apply(res.differential(gen), res.p)
            rhs = res.apply_d(f.apply({gen: one}, res.p))
            if lhs != rhs:
                bad.append(gen)
    return bad


def shift_map_for(triple: Triple) -> IndexShiftMap:
    """The composite ``xi_x^(a/2) xi_y^(b/2) xi_g^(c/2)`` for an even triple."""
    _require_even(triple)
    f = IndexShiftMap((0, 0, 0), name="id")
    for base, k in zip((XI_X, XI_Y, XI_G), triple):
        for _ in range(k // 2):
            f = f.then(base)
    return f


def _require_even(t: Sequence[int]) -> None:
    if len(t) != 3 or any(v < 0 or v % 2 for v in t):
        raise ValueError(f"cup products are only available for even index triples, got {tuple(t)}")


def cup_even(a: Triple, b: Triple) -> Triple:
    """``phi*_a  cup  phi*_b`` for even triples: the componentwise sum."""
    _require_even(a)
    _require_even(b)
    return tuple(x + y for x, y in zip(a, b))


def realize_cup(a: Triple, b: Triple, res: TwistedComplex) -> Dict[Gen, int]:
    """Pull ``phi*_a`` back along the chain map lifting ``phi*_b``.

    Returns the resulting cochain on the generators of degree ``|a| + |b|`` as
    ``{generator: value}`` with zeros omitted.
    """
    f = shift_map_for(b)
    out = {}
    for gen in res.generators(sum(a) + sum(b)):
        img = f.image(gen)
        if img is not None and img[0] == tuple(a):
            out[gen] = img[1] % res.p
    return out


def even_triples(max_degree: int) -> List[Triple]:
    return [t for t in product(range(0, max_degree + 1, 2), repeat=3) if sum(t) <= max_degree]


def cup_product_defects(res: TwistedComplex, max_degree: int = 8) -> List[Tuple[Triple, Triple]]:
    """Pairs of even triples whose realized product differs from ``phi*`` of the sum."""
    bad = []
    checked: Dict[Triple, bool] = {}
    for a in even_triples(max_degree):
        for b in even_triples(max_degree - sum(a)):
            if b not in checked:
                checked[b] = verify_chain_map(shift_map_for(b), res, max_degree)
            want = {cup_even(a, b): 1}
            if not checked[b] or realize_cup(a, b, res) != want or realize_cup(b, a, res) != want:
                bad.append((a, b))
    return bad


# --- Y cohomology description ---------------------------------------------

def y_description_defects(res: TwistedComplex, max_degree: int) -> List[int]:
    """Degrees where non-cocycles or coboundaries deviate from the parity description."""
    cc = CochainComplex(res)
    bad = []
    for n in range(max_degree + 1):
        gens = res.generators(n)
        m = cc.coboundary(n)
        noncocycles = {gens[a] for a in range(len(gens)) if m[:, a].any()}
        want = {g for g in gens if g[0] % 2 == 1 and g[1] % 2 == 0 and g[2] % 2 == 0}
        hit = set()
        if n:
            mp = cc.coboundary(n - 1)
            hit = {gens[b] for b in range(len(gens)) if mp[b, :].any()}
            # coboundaries span exactly the hit coordinates when d* is a partial permutation
            if cc.rank(n - 1) != len(hit):
                bad.append(n)
                continue
        want_hit = {g for g in gens if g[0] % 2 == 0 and g[1] % 2 == 1 and g[2] % 2 == 1}
        if noncocycles != want or hit != want_hit:
            bad.append(n)
    return bad


def dual_image(res, n: int, gen_label: str) -> Dict[str, int]:
    """``d^*`` of one dual basis vector, as ``{label: coefficient}``."""
    labels = res.basis(n)
    a = labels.index(gen_label)
    col = dual_differential(res, n)[:, a]
    nxt = res.basis(n + 1)
    return {nxt[b]: int(col[b]) for b in np.nonzero(col)[0]}


# --- chain isomorphism with the tensor-product complex --------------------

def tensor_differential(m: Sequence[int], triple: Triple) -> Dict[Tuple[Tuple[int, ...], Triple], int]:
    """Differential of ``1 (x) 1 (x) 1`` in ``P(k[y]/y^m3) (x) P(k[x]/x^m2) (x) P(k[w]/w^m1)``.

    Koszul signs: a factor's differential is signed by the total degree of
    the factors to its left.  Returns ``{(coefficient word, (i, j, k)): sign}``.
    """
    i, j, k = triple
    out = {}
    # factors in left-to-right order: y (degree k), x (degree j), w (degree i)
    left = 0
    for letter, deg, slot in ((2, k, 2), (1, j, 1), (0, i, 0)):
        if deg > 0:
            power = 1 if deg % 2 else m[letter] - 1
            tgt = list(triple)
            tgt[slot] -= 1
            out[((letter,) * power, tuple(tgt))] = (-1) ** left
        left += deg
    return out


def chain_iso_check(m1: int, m2: int, m3: int, max_degree: int, p: int = 3) -> bool:
    return not chain_iso_defects(m1, m2, m3, max_degree, p)


def chain_iso_defects(m1: int, m2: int, m3: int, max_degree: int, p: int = 3) -> List[Tuple[int, Triple]]:
    """Chains where ``psi d_Anick != d_tensor psi`` with ``psi(u_{ijk}) = phi_{ijk}``."""
    rs = truncated_ring(m1, m2, m3, p)
    res = AnickResolution(rs)
    m = (m1, m2, m3)
    bad = []
    for n in range(1, max_degree + 1):
        triples = [truncated_index(c) for c in res.chains(n)]
        if len(set(triples)) != len(triples) or len(triples) != (n + 1) * (n + 2) // 2:
            bad.append((n, (-1, -1, -1)))
            continue
        prev = [truncated_index(c) for c in res.chains(n - 1)]
        for ci, tr in enumerate(triples):
            got: Dict[Tuple[Tuple[int, ...], Triple], int] = {}
            for (r, cj), c in res.differential(n, ci).terms.items():
                got[(r, prev[cj])] = c
            want: Dict[Tuple[Tuple[int, ...], Triple], int] = {}
            for (word, tgt), s in tensor_differential(m, tr).items():
                for w, c in rs.reduce_word(word).items():
                    key = (w, tgt)
                    want[key] = (want.get(key, 0) + s * c) % p
            want = {k: v for k, v in want.items() if v}
            if got != want:
                bad.append((n, tr))
    return bad


def y_cochains(p: int, q: int) -> CochainComplex:
    return CochainComplex(y_complex(p, q))
