"""Finitely presented augmented algebras: completion, normal forms, normal words.

A :class:`RewriteSystem` holds rules ``tip -> tail``.  Each tip is a word all
of whose proper subwords are normal; each tail is a combination of normal
words smaller than the tip.  Completion is plain overlap resolution
(noncommutative Buchberger) with a degree cap; finite dimensionality is
certified by enumerating normal words until a degree has none.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .freealg import Alphabet, NcPoly, Word, deglex_key
from .gfp import check_prime, inv_mod

Poly = Dict[Word, int]


class CompletionInconclusive(RuntimeError):
    """Raised when completion does not certify within the degree cap."""

    def __init__(self, message: str, partial: "RewriteSystem"):
        super().__init__(message)
        self.partial = partial


class InfiniteDimensional(ValueError):
    pass


class Presentation:
    """Ordered generators plus relations; the augmentation kills every generator."""

    def __init__(self, alphabet: Alphabet | Sequence[str], p: int, relations: Iterable[NcPoly], name: str = ""):
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        self.alphabet = alphabet
        self.p = check_prime(p)
        self.relations = list(relations)
        self.name = name
        for rel in self.relations:
            if rel.p != p or rel.alphabet != alphabet:
                raise ValueError("relation over a different alphabet or characteristic")
            if not rel:
                raise ValueError("relations must be nonzero")
            if rel.constant_term():
                raise ValueError(f"relation {rel} has a nonzero constant term; augmentation undefined")

    @classmethod
    def from_strings(cls, names: Sequence[str], p: int, relations: Iterable[str],
                     params: Mapping[str, int] | None = None, name: str = "") -> "Presentation":
        from .parse import parse_poly

        alphabet = Alphabet(names)
        return cls(alphabet, p, [parse_poly(r, alphabet, p, params) for r in relations], name=name)

    def max_degree(self) -> int:
        return max((r.degree() for r in self.relations), default=1)

    def __repr__(self) -> str:
        rels = ", ".join(str(r) for r in self.relations)
        return f"Presentation({self.name or '?'}: <{', '.join(self.alphabet.names)}> / ({rels}) over GF({self.p}))"


def _find_factor(word: Word, sub: Word, start: int = 0) -> int:
    n, m = len(word), len(sub)
    for i in range(start, n - m + 1):
        if word[i:i + m] == sub:
            return i
    return -1


class RewriteSystem:
    """Reduction rules ``tip -> tail`` over GF(p); immutable once built."""

    def __init__(self, alphabet: Alphabet, p: int, rules: Mapping[Word, Mapping[Word, int]],
                 degree_cap: int | None = None):
        self.alphabet = alphabet
        self.p = p
        self.rules: Dict[Word, Poly] = {tuple(t): dict(tail) for t, tail in rules.items()}
        self.tips: Tuple[Word, ...] = tuple(sorted(self.rules, key=deglex_key))
        self._tipset = frozenset(self.tips)
        self._tip_lengths = sorted({len(t) for t in self.tips})
        self.degree_cap = degree_cap
        self._cache: Dict[Word, Poly] = {}
        self._normal_words: List[Word] | None = None
        self.finite: bool | None = None

    # --- tip detection -------------------------------------------------
    def tip_occurrences(self, word: Word) -> List[Tuple[int, Word]]:
        out = []
        n = len(word)
        for i in range(n):
            for L in self._tip_lengths:
                if i + L > n:
                    break
                sub = word[i:i + L]
                if sub in self._tipset:
                    out.append((i, sub))
        return out

    def contains_tip(self, word: Word) -> bool:
        n = len(word)
        tipset = self._tipset
        for L in self._tip_lengths:
            if L > n:
                break
            for i in range(n - L + 1):
                if word[i:i + L] in tipset:
                    return True
        return False

    def is_normal(self, word: Word) -> bool:
        return not self.contains_tip(word)

    def _choose(self, word: Word) -> Tuple[int, Word] | None:
        occ = self.tip_occurrences(word)
        if not occ:
            return None
        # deglex-largest tip, leftmost occurrence
        return max(occ, key=lambda it: (deglex_key(it[1]), -it[0]))

    # --- reduction -----------------------------------------------------
    def reduce_word(self, word: Word) -> Poly:
        """Normal form of a single word, as a dict (memoized)."""
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        hit = self._choose(word)
        if hit is None:
            result = {word: 1}
        else:
            pos, tip = hit
            left, right = word[:pos], word[pos + len(tip):]
            p = self.p
            result = {}
            for w, c in self.rules[tip].items():
                for w2, c2 in self.reduce_word(left + w + right).items():
                    v = (result.get(w2, 0) + c * c2) % p
                    if v:
                        result[w2] = v
                    else:
                        result.pop(w2, None)
        self._cache[word] = result
        return result

    def nf_dict(self, poly: Mapping[Word, int]) -> Poly:
        p = self.p
        out: Poly = {}
        for w, c in poly.items():
            if not c % p:
                continue
            for w2, c2 in self.reduce_word(w).items():
                v = (out.get(w2, 0) + c * c2) % p
                if v:
                    out[w2] = v
                else:
                    out.pop(w2, None)
        return out

    def normal_form(self, f: NcPoly) -> NcPoly:
        if f.p != self.p or f.alphabet != self.alphabet:
            raise ValueError("polynomial over a different alphabet or characteristic")
        return NcPoly._raw(self.alphabet, self.p, self.nf_dict(f.terms))

    def mul(self, a: Mapping[Word, int], b: Mapping[Word, int]) -> Poly:
        """Normal form of the product of two normal-form dicts."""
        p = self.p
        out: Poly = {}
        for w1, c1 in a.items():
            for w2, c2 in b.items():
                c = c1 * c2
                for w, c3 in self.reduce_word(w1 + w2).items():
                    v = (out.get(w, 0) + c * c3) % p
                    if v:
                        out[w] = v
                    else:
                        out.pop(w, None)
        return out

    def mul_word(self, word: Word, b: Mapping[Word, int]) -> Poly:
        """Normal form of ``word * b``."""
        return self.mul({word: 1}, b)

    def poly(self, terms: Mapping[Word, int]) -> NcPoly:
        return NcPoly(self.alphabet, self.p, terms)

    def parse(self, text: str, params: Mapping[str, int] | None = None) -> NcPoly:
        from .parse import parse_poly

        return self.normal_form(parse_poly(text, self.alphabet, self.p, params))

    # --- structure -----------------------------------------------------
    def proper_prefixes(self) -> List[Word]:
        """The set of nonempty proper prefixes of tips, deglex sorted."""
        out = {t[:k] for t in self.tips for k in range(1, len(t))}
        out.update((i,) for i in range(len(self.alphabet)))
        return sorted(out, key=deglex_key)

    def overlaps(self) -> List[Tuple[Word, Word, int]]:
        """All (t1, t2, k) with the length-k suffix of t1 equal to the length-k prefix of t2."""
        out = []
        for t1 in self.tips:
            for t2 in self.tips:
                for k in range(1, min(len(t1), len(t2))):
                    if t1[-k:] == t2[:k]:
                        out.append((t1, t2, k))
        return out

    def s_polynomial(self, t1: Word, t2: Word, k: int) -> Poly:
        """Difference of the two one-step rewrites of the overlap word."""
        p = self.p
        out: Poly = {}
        for w, c in self.rules[t1].items():
            key = w + t2[k:]
            out[key] = (out.get(key, 0) + c) % p
        for w, c in self.rules[t2].items():
            key = t1[:len(t1) - k] + w
            out[key] = (out.get(key, 0) - c) % p
        return {w: c for w, c in out.items() if c}

    def overlap_defects(self) -> List[Tuple[Word, Word, int, Poly]]:
        """Overlaps whose two reductions disagree (empty iff confluent)."""
        bad = []
        for t1, t2, k in self.overlaps():
            r = self.nf_dict(self.s_polynomial(t1, t2, k))
            if r:
                bad.append((t1, t2, k, r))
        return bad

    def normal_words_by_degree(self, max_degree: int) -> List[List[Word]]:
        levels: List[List[Word]] = [[()]]
        letters = range(len(self.alphabet))
        for d in range(1, max_degree + 1):
            nxt = []
            for w in levels[-1]:
                for a in letters:
                    cand = w + (a,)
                    if not any(cand[-L:] in self._tipset for L in self._tip_lengths if L <= d):
                        nxt.append(cand)
            levels.append(sorted(nxt))
            if not nxt:
                break
        return levels

    def normal_words(self) -> List[Word]:
        """Deglex-sorted list of all normal words; raises if there are infinitely many."""
        if self._normal_words is None:
            cap = self.degree_cap or 64
            levels = self.normal_words_by_degree(cap + 1)
            if levels[-1]:
                raise InfiniteDimensional(f"normal words exist in degree {cap + 1}; not certified finite")
            self._normal_words = [w for level in levels for w in level]
            self.finite = True
        return list(self._normal_words)

    def dimension(self) -> int:
        return len(self.normal_words())

    def hilbert_function(self) -> List[int]:
        levels = self.normal_words_by_degree((self.degree_cap or 64) + 1)
        while levels and not levels[-1]:
            levels.pop()
        return [len(level) for level in levels]

    def format_tip(self, tip: Word) -> str:
        return self.alphabet.word_str(tip)

    def __repr__(self) -> str:
        tips = ", ".join(self.format_tip(t) for t in self.tips)
        return f"RewriteSystem(tips=[{tips}], p={self.p})"


def complete(pres: Presentation, degree_cap: int | None = None, require_finite: bool = True) -> RewriteSystem:
    """Complete the relations of ``pres`` to a confluent rewrite system.

    Overlaps whose word is longer than ``degree_cap`` are not resolved; if any
    such overlap remains, or normal words persist past the cap, the result is
    uncertified and :class:`CompletionInconclusive` is raised carrying the
    partial system.
    """
    p = pres.p
    max_deg = pres.max_degree()
    cap = degree_cap if degree_cap is not None else 3 * max_deg
    if cap < max_deg:
        raise ValueError(f"degree_cap {cap} below the maximal relation degree {max_deg}")

    rules: Dict[Word, Poly] = {}
    queue: List[Poly] = [dict(r.terms) for r in pres.relations]
    skipped: List[Tuple[Word, Word, int]] = []

    def system() -> RewriteSystem:
        return RewriteSystem(pres.alphabet, p, rules, degree_cap=cap)

    while True:
        while queue:
            rs = system()
            f = rs.nf_dict(queue.pop(0))
            if not f:
                continue
            tip = max(f, key=deglex_key)
            ic = inv_mod(f[tip], p)
            tail = {w: (-c * ic) % p for w, c in f.items() if w != tip}
            for t in list(rules):
                if _find_factor(t, tip) >= 0:
                    old = rules.pop(t)
                    back = {w: (-c) % p for w, c in old.items()}
                    back[t] = 1
                    queue.append(back)
            rules[tip] = tail
        rs = system()
        rules = {t: rs.nf_dict(tail) for t, tail in rules.items()}
        rs = system()
        skipped = []
        for t1, t2, k in rs.overlaps():
            if len(t1) + len(t2) - k > cap:
                skipped.append((t1, t2, k))
                continue
            s = rs.nf_dict(rs.s_polynomial(t1, t2, k))
            if s:
                queue.append(s)
        if not queue:
            break

    rs = system()
    if skipped:
        raise CompletionInconclusive(
            f"{len(skipped)} overlap(s) exceed degree cap {cap}; completion not certified", rs)
    if require_finite:
        try:
            rs.normal_words()
        except InfiniteDimensional as exc:
            raise CompletionInconclusive(str(exc), rs) from None
    return rs


def normal_words(rs: RewriteSystem) -> List[Word]:
    return rs.normal_words()


def normal_form(f: NcPoly, rs: RewriteSystem) -> NcPoly:
    return rs.normal_form(f)
