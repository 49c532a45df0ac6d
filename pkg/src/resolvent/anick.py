"""Anick resolution of the trivial module over a completed presentation.

Chains are paths from the vertex ``1`` in the quiver whose vertices are the
proper prefixes of tips; a chain is stored as the tuple of its vertices in
path order, and its word is the product of the vertices written right to
left.  Free-module elements of ``A (x) kC_n`` are dicts keyed by
``(r, chain_index)`` with ``r`` a normal word.

The differential ``d_n`` and the contracting homotopy ``s_{n-1}`` are built
together, degree by degree, following the recursive construction:
``d_n(1 (x) r u') = r (x) u' - s_{n-2} d_{n-1}(r (x) u')``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from .freealg import Word
from .rewrite import RewriteSystem

Vertex = Word
Chain = Tuple[Vertex, ...]
Key = Tuple[Word, int]
Elem = Dict[Key, int]

MAX_HOMOTOPY_STEPS = 10**6


class NotInKernel(ValueError):
    """The argument of the homotopy is not a cycle."""


class HomotopyDiverged(RuntimeError):
    pass


@dataclass
class ChainQuiver:
    """Reduced quiver: the connected component of the vertex ``()``."""

    vertices: List[Vertex]
    arrows: Dict[Vertex, List[Vertex]] = field(default_factory=dict)

    def has_arrow(self, f: Vertex, g: Vertex) -> bool:
        return g in self.arrows.get(f, ())

    def arrow_set(self) -> set:
        return {(f, g) for f, gs in self.arrows.items() for g in gs}


def _unique_prefix_tip(rs: RewriteSystem, word: Word) -> bool:
    occ = rs.tip_occurrences(word)
    return len(occ) == 1 and occ[0][0] == 0


def build_quiver(rs: RewriteSystem) -> ChainQuiver:
    one: Vertex = ()
    prefixes = rs.proper_prefixes()
    arrows: Dict[Vertex, List[Vertex]] = {one: [(i,) for i in range(len(rs.alphabet))]}
    for f in prefixes:
        arrows[f] = [g for g in prefixes if _unique_prefix_tip(rs, g + f)]
    # connected component of 1, ignoring arrow direction
    nbrs: Dict[Vertex, set] = {v: set() for v in [one] + prefixes}
    for f, gs in arrows.items():
        for g in gs:
            nbrs[f].add(g)
            nbrs[g].add(f)
    seen = {one}
    stack = [one]
    while stack:
        v = stack.pop()
        for u in nbrs[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    vertices = [one] + [v for v in prefixes if v in seen]
    kept = {v: [g for g in arrows.get(v, []) if g in seen] for v in vertices}
    return ChainQuiver(vertices=vertices, arrows=kept)


def chains(q: ChainQuiver, n: int) -> List[Chain]:
    """All paths of length ``n`` from ``1``, lexicographic on vertex sequences."""
    if n < 0:
        raise ValueError("chain degree must be non-negative")
    level: List[Chain] = [()]
    for _ in range(n):
        nxt = []
        for c in level:
            last = c[-1] if c else ()
            for g in q.arrows.get(last, ()):
                nxt.append(c + (g,))
        level = nxt
    return sorted(level)


def chain_word(chain: Chain) -> Word:
    out: Word = ()
    for v in chain:
        out = v + out
    return out


class ModuleElement:
    """Element of ``A (x) kC_n`` with normal-word coefficients."""

    __slots__ = ("res", "n", "terms")

    def __init__(self, res: "AnickResolution", n: int, terms: Mapping[Key, int] | None = None):
        self.res = res
        self.n = n
        p = res.p
        self.terms: Elem = {k: c % p for k, c in (terms or {}).items() if c % p}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        return ModuleElement(self.res, self.n, _axpy(self.terms, other.terms, 1, self.res.p))

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return ModuleElement(self.res, self.n, _axpy(self.terms, other.terms, -1, self.res.p))

    def scale(self, c: int) -> "ModuleElement":
        return ModuleElement(self.res, self.n, {k: v * c for k, v in self.terms.items()})

    def items(self) -> Iterator[Tuple[Word, Chain, int]]:
        cs = self.res.chains(self.n)
        for (r, ci), c in self.terms.items():
            yield r, cs[ci], c

    def by_label(self) -> Dict[Tuple[str, str], int]:
        """``{(coefficient word, chain word): coeff}`` with readable labels."""
        alph = self.res.rs.alphabet
        return {(alph.word_str(r), self.res.label(self.n, ci)): c for (r, ci), c in self.terms.items()}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        from .gfp import signed

        res = self.res
        key = res._term_key(self.n)
        out = []
        for k in sorted(self.terms, key=key, reverse=True):
            c = signed(self.terms[k], res.p)
            r, ci = k
            coef = res.rs.alphabet.word_str(r)
            body = f"{coef}|{res.label(self.n, ci)}"
            mag = abs(c)
            out.append(("-" if c < 0 else "+", body if mag == 1 else f"{mag}*{body}"))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    __repr__ = __str__


def _axpy(a: Mapping[Key, int], b: Mapping[Key, int], c: int, p: int) -> Elem:
    out = dict(a)
    for k, v in b.items():
        nv = (out.get(k, 0) + c * v) % p
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


class AnickResolution:
    """Anick resolution, built lazily degree by degree with memoized ``d_n`` on chains."""

    def __init__(self, rs: RewriteSystem, max_degree: int | None = None):
        self.rs = rs
        self.p = rs.p
        self.max_degree = max_degree
        self.quiver = build_quiver(rs)
        self._chains: List[List[Chain]] = []
        self._index: List[Dict[Chain, int]] = []
        self._words: List[List[Word]] = []
        self._d: Dict[int, Dict[int, Elem]] = {}
        self._lmul_cache: Dict[Tuple[Word, int, int], Elem] = {}
        self.homotopy_steps = 0

    # --- bases ---------------------------------------------------------
    def chains(self, n: int) -> List[Chain]:
        while len(self._chains) <= n:
            k = len(self._chains)
            if k == 0:
                level: List[Chain] = [()]
            else:
                level = []
                for c in self._chains[k - 1]:
                    for g in self.quiver.arrows.get(c[-1] if c else (), ()):
                        level.append(c + (g,))
                level.sort()
            self._chains.append(level)
            self._index.append({c: i for i, c in enumerate(level)})
            self._words.append([chain_word(c) for c in level])
        return self._chains[n]

    def chain_index(self, n: int, chain: Chain) -> int:
        self.chains(n)
        return self._index[n][chain]

    def find_chain(self, n: int, word: Word | str) -> Chain:
        """The unique chain of degree ``n`` with the given word."""
        if isinstance(word, str):
            word = self.rs.alphabet.word(word)
        hits = [c for c, w in zip(self.chains(n), self._words[n]) if w == word]
        if len(hits) != 1:
            raise KeyError(f"{len(hits)} chains of degree {n} with word {word}")
        return hits[0]

    def label(self, n: int, ci: int) -> str:
        self.chains(n)
        return self.rs.alphabet.word_str(self._words[n][ci])

    def basis(self, n: int) -> List[str]:
        return [self.label(n, i) for i in range(len(self.chains(n)))]

    def _term_key(self, n: int):
        self.chains(n)
        words = self._words[n]
        chs = self._chains[n]

        def key(k: Key):
            r, ci = k
            w = words[ci]
            return (len(r) + len(w), r + w, len(r), chs[ci])

        return key

    # --- module operations ---------------------------------------------
    def element(self, n: int, terms: Mapping[Tuple[Word | str, Chain | str], int]) -> ModuleElement:
        """Build an element from ``{(coefficient word, chain or chain word): coeff}``."""
        out: Elem = {}
        alph = self.rs.alphabet
        for (r, u), c in terms.items():
            if isinstance(r, str):
                r = alph.word(r)
            if isinstance(u, str):
                u = self.find_chain(n, u)
            ci = self.chain_index(n, u)
            for w, c2 in self.rs.reduce_word(tuple(r)).items():
                out[(w, ci)] = (out.get((w, ci), 0) + c * c2) % self.p
        return ModuleElement(self, n, out)

    def _lmul(self, a: Word, n: int, elem: Mapping[Key, int]) -> Elem:
        p = self.p
        out: Elem = {}
        reduce_word = self.rs.reduce_word
        for (r, ci), c in elem.items():
            for w, c2 in reduce_word(a + r).items():
                k = (w, ci)
                v = (out.get(k, 0) + c * c2) % p
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return out

    def _d_basis(self, n: int, ci: int) -> Elem:
        """``d_n(1 (x) u)`` for the chain of index ``ci``."""
        table = self._d.setdefault(n, {})
        val = table.get(ci)
        if val is not None:
            return val
        chain = self.chains(n)[ci]
        if n == 1:
            val = {(chain[0], 0): 1}
        else:
            r, rest = chain[-1], chain[:-1]
            ri = self.chain_index(n - 1, rest)
            boundary = self._lmul(r, n - 2, self._d_basis(n - 1, ri))
            val = _axpy({(r, ri): 1}, self._homotopy(n - 1, boundary), -1, self.p)
        table[ci] = val
        return val

    def _d_scaled(self, a: Word, n: int, ci: int) -> Elem:
        key = (a, n, ci)
        val = self._lmul_cache.get(key)
        if val is None:
            val = self._lmul(a, n - 1, self._d_basis(n, ci))
            self._lmul_cache[key] = val
        return val

    def _apply_d(self, n: int, elem: Mapping[Key, int]) -> Elem:
        p = self.p
        out: Elem = {}
        for (r, ci), c in elem.items():
            for k, v in self._d_scaled(r, n, ci).items():
                nv = (out.get(k, 0) + c * v) % p
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
        return out

    def _s0(self, elem: Mapping[Key, int]) -> Elem:
        out: Elem = {}
        for (r, _), c in elem.items():
            if r:
                k = (r[:-1], self.chain_index(1, (r[-1:],)))
                out[k] = (out.get(k, 0) + c) % self.p
        return {k: v for k, v in out.items() if v}

    def _homotopy(self, n: int, xi: Mapping[Key, int]) -> Elem:
        """``s_{n-1}(xi)`` for ``xi`` a cycle in degree ``n - 1``."""
        if n == 1:
            return self._s0(xi)
        p = self.p
        rs = self.rs
        key = self._term_key(n - 1)
        chains_prev = self.chains(n - 1)
        index_n = self._index[n] if len(self._index) > n else None
        result: Elem = {}
        cur: Elem = dict(xi)
        steps = 0
        while cur:
            steps += 1
            if steps > MAX_HOMOTOPY_STEPS:
                raise HomotopyDiverged(f"s_{n - 1} exceeded {MAX_HOMOTOPY_STEPS} steps")
            top = max(cur, key=key)
            a1 = cur[top]
            r1, ci = top
            chain = chains_prev[ci]
            u_last = chain[-1]
            for k in range(len(r1) - 1, -1, -1):
                if rs.contains_tip(r1[k:] + u_last):
                    break
            else:
                raise NotInKernel(f"highest term {rs.alphabet.word_str(r1)}|"
                                  f"{self.label(n - 1, ci)} admits no tip factorization")
            v, t = r1[:k], r1[k:]
            if index_n is None:
                self.chains(n)
                index_n = self._index[n]
            new_ci = index_n.get(chain + (t,))
            if new_ci is None:
                raise NotInKernel(f"no arrow {u_last} -> {t} in the reduced quiver")
            kk = (v, new_ci)
            nv = (result.get(kk, 0) + a1) % p
            if nv:
                result[kk] = nv
            else:
                result.pop(kk, None)
            for kd, c in self._d_scaled(v, n, new_ci).items():
                nv = (cur.get(kd, 0) - a1 * c) % p
                if nv:
                    cur[kd] = nv
                else:
                    cur.pop(kd, None)
        self.homotopy_steps += steps
        return result

    # --- public API ----------------------------------------------------
    def differential(self, n: int, u: Chain | str | int) -> ModuleElement:
        """``d_n(1 (x) u)``."""
        if n < 1:
            raise ValueError("differential degree must be >= 1")
        if self.max_degree is not None and n > self.max_degree:
            raise ValueError(f"degree {n} exceeds the resolution bound {self.max_degree}")
        if isinstance(u, str):
            u = self.find_chain(n, u)
        ci = u if isinstance(u, int) else self.chain_index(n, u)
        return ModuleElement(self, n - 1, self._d_basis(n, ci))

    def apply_d(self, n: int, elem: ModuleElement) -> ModuleElement:
        if elem.n != n:
            raise ValueError(f"element lives in degree {elem.n}, not {n}")
        if n == 0:
            raise ValueError("d_0 is the augmentation; use augment()")
        return ModuleElement(self, n - 1, self._apply_d(n, elem.terms))

    def homotopy(self, n: int, xi: ModuleElement) -> ModuleElement:
        """``s_{n-1}(xi)`` for a cycle ``xi`` of degree ``n - 1``; ``d_n`` of the result is ``xi``."""
        if xi.n != n - 1:
            raise ValueError(f"homotopy s_{n - 1} takes degree {n - 1} elements, got {xi.n}")
        if n == 1:
            if any(r == () for (r, _) in xi.terms):
                raise NotInKernel("s_0 is defined on the augmentation ideal only")
        return ModuleElement(self, n, self._homotopy(n, xi.terms))

    def augmented_boundary(self, n: int, ci: int) -> Dict[int, int]:
        """Augmentation of the coefficients of ``d_n(1 (x) u)``, keyed by chain index."""
        out: Dict[int, int] = {}
        for (r, cj), c in self._d_basis(n, ci).items():
            if not r:
                out[cj] = (out.get(cj, 0) + c) % self.p
        return {k: v for k, v in out.items() if v}

    def rank(self, n: int) -> int:
        return len(self.chains(n))

    def free_basis(self, n: int) -> List[Key]:
        """Vector-space basis ``r (x) u`` of ``A (x) kC_n``."""
        nw = self.rs.normal_words()
        return [(r, ci) for ci in range(len(self.chains(n))) for r in nw]

    def matrix(self, n: int):
        """``d_n`` as a GF(p) matrix on the full vector-space bases (rows: degree n-1)."""
        import numpy as np

        rows = {k: i for i, k in enumerate(self.free_basis(n - 1))}
        cols = self.free_basis(n)
        m = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for j, (r, ci) in enumerate(cols):
            for k, c in self._d_scaled(r, n, ci).items():
                m[rows[k], j] = c
        return m


def differential(res: AnickResolution, n: int, u) -> ModuleElement:
    return res.differential(n, u)


def homotopy(res: AnickResolution, n: int, xi: ModuleElement) -> ModuleElement:
    return res.homotopy(n, xi)


# --- truncated polynomial rings -----------------------------------------

def truncated_index(chain: Chain, m: Sequence[int] = (0, 0, 0)) -> Tuple[int, int, int]:
    """Triple ``(i, j, k)``: how many vertices of the path are powers of w, x, y."""
    counts = [0, 0, 0]
    for v in chain:
        counts[v[0]] += 1
    return tuple(counts)


def truncated_closed_form(m: Sequence[int], i: int, j: int, k: int) -> Dict[Tuple[Word, Tuple[int, int, int]], int]:
    """Closed-form differential of ``u_{ijk}`` over ``k[w,x,y]/(w^m1, x^m2, y^m3)``.

    Returns ``{(coefficient word, (i', j', k')): sign}``.
    """
    def sigma(a: int, ell: int) -> int:
        return 1 if ell % 2 else m[a] - 1

    out: Dict[Tuple[Word, Tuple[int, int, int]], int] = {}
    if k > 0:
        out[((2,) * sigma(2, k), (i, j, k - 1))] = 1
    if j > 0:
        out[((1,) * sigma(1, j), (i, j - 1, k))] = (-1) ** k
    if i > 0:
        out[((0,) * sigma(0, i), (i - 1, j, k))] = (-1) ** (j + k)
    return out


# --- verification helpers --------------------------------------------------

def d_squared_failures(res: AnickResolution, max_degree: int) -> List[Tuple[int, str]]:
    """Chains ``u`` of degree ``2..max_degree`` with ``d(d(1 (x) u)) != 0``."""
    bad = []
    for n in range(2, max_degree + 1):
        for ci in range(len(res.chains(n))):
            if res._apply_d(n - 1, res._d_basis(n, ci)):
                bad.append((n, res.label(n, ci)))
    return bad


def random_element(res: AnickResolution, n: int, rng, terms: int = 4) -> ModuleElement:
    """A random element of ``A (x) kC_n`` with up to ``terms`` nonzero summands."""
    nw = res.rs.normal_words()
    k = len(res.chains(n))
    out: Elem = {}
    for _ in range(terms):
        key = (nw[rng.randrange(len(nw))], rng.randrange(k))
        out[key] = (out.get(key, 0) + rng.randrange(1, res.p)) % res.p
    return ModuleElement(res, n, out)


def homotopy_contract_failures(res: AnickResolution, n: int, samples: int, rng) -> List[str]:
    """Check ``d_n s_{n-1} (xi) = xi`` for ``xi = d_n(eta)`` with random ``eta``."""
    bad = []
    for _ in range(samples):
        eta = random_element(res, n, rng)
        xi = res.apply_d(n, eta)
        if res.apply_d(n, res.homotopy(n, xi)) != xi:
            bad.append(str(eta))
    return bad
