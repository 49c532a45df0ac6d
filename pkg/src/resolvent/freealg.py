"""Words over an ordered alphabet and noncommutative polynomials over GF(p).

A word is a tuple of generator indices; generator ``i`` sorts below
generator ``j`` when ``i < j``.  Words are compared degree-lexicographically:
first by length, then letter by letter from the left.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import groupby
from math import comb
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .gfp import FieldScalar, check_prime, signed

Word = Tuple[int, ...]

LT, EQ, GT = -1, 0, 1


class Alphabet:
    """Ordered generator names; position in the list is the order."""

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"generator names must be distinct: {names}")
        for name in names:
            if not name.isidentifier():
                raise ValueError(f"bad generator name {name!r}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.names)})"

    def index(self, name: str) -> int:
        return self._index[name]

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def word(self, text: str) -> Word:
        """Parse ``"y*x^2"`` (or ``"yx^2"`` for one-letter names) into a word."""
        text = text.replace(" ", "")
        if text in ("", "1"):
            return ()
        out: list[int] = []
        parts = text.split("*") if "*" in text or not self._single_letters() else None
        if parts is None:
            parts = []
            i = 0
            while i < len(text):
                j = i + 1
                if j < len(text) and text[j] == "^":
                    j += 1
                    while j < len(text) and text[j].isdigit():
                        j += 1
                parts.append(text[i:j])
                i = j
        for part in parts:
            name, _, exp = part.partition("^")
            out.extend([self._index[name]] * (int(exp) if exp else 1))
        return tuple(out)

    def _single_letters(self) -> bool:
        return all(len(n) == 1 for n in self.names)

    def word_str(self, word: Word, sep: str | None = None) -> str:
        if not word:
            return "1"
        if sep is None:
            sep = "" if self._single_letters() else "*"
        chunks = []
        for g, run in groupby(word):
            k = len(list(run))
            chunks.append(self.names[g] + (f"^{k}" if k > 1 else ""))
        return sep.join(chunks)


def deglex_key(word: Word) -> tuple:
    return (len(word), word)


def cmp_deglex(a: Word, b: Word) -> int:
    """Compare two words: ``LT`` (-1), ``EQ`` (0) or ``GT`` (1)."""
    ka, kb = deglex_key(a), deglex_key(b)
    return (ka > kb) - (ka < kb)


def rising(ell: int, t: int, p: int) -> int:
    """Rising factorial ``ell (ell+1) ... (ell+t-1)`` reduced mod ``p``."""
    if t < 0:
        raise ValueError(f"rising factorial needs t >= 0, got {t}")
    out = 1
    for k in range(t):
        out = out * (ell + k) % p
    return out % p


@lru_cache(maxsize=None)
def binom_mod(n: int, k: int, p: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k) % p


class NcPoly:
    """Finitely supported map from words to GF(p); zero coefficients are never stored."""

    __slots__ = ("alphabet", "p", "terms")

    def __init__(self, alphabet: Alphabet, p: int, terms: Mapping[Word, int] | None = None):
        self.alphabet = alphabet
        self.p = p
        clean: Dict[Word, int] = {}
        if terms:
            for w, c in terms.items():
                c %= p
                if c:
                    clean[tuple(w)] = c
        self.terms = clean

    # constructors
    @classmethod
    def zero(cls, alphabet: Alphabet, p: int) -> "NcPoly":
        return cls(alphabet, p)

    @classmethod
    def constant(cls, c: int, alphabet: Alphabet, p: int) -> "NcPoly":
        return cls(alphabet, p, {(): c})

    @classmethod
    def monomial(cls, word: Word | str, alphabet: Alphabet, p: int, coeff: int = 1) -> "NcPoly":
        if isinstance(word, str):
            word = alphabet.word(word)
        return cls(alphabet, p, {tuple(word): coeff})

    @classmethod
    def _raw(cls, alphabet: Alphabet, p: int, terms: Dict[Word, int]) -> "NcPoly":
        obj = cls.__new__(cls)
        obj.alphabet, obj.p, obj.terms = alphabet, p, terms
        return obj

    def _check(self, other: "NcPoly") -> None:
        if self.p != other.p:
            raise ValueError(f"mismatched characteristics {self.p} and {other.p}")
        if self.alphabet != other.alphabet:
            raise ValueError("mismatched alphabets")

    def _lift(self, other) -> "NcPoly":
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        if isinstance(other, FieldScalar):
            if other.p != self.p:
                raise ValueError(f"mismatched characteristics {self.p} and {other.p}")
            return NcPoly.constant(other.value, self.alphabet, self.p)
        if isinstance(other, int):
            return NcPoly.constant(other, self.alphabet, self.p)
        return NotImplemented

    # arithmetic
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        p = self.p
        for w, c in other.terms.items():
            v = (out.get(w, 0) + c) % p
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return NcPoly._raw(self.alphabet, p, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        return NcPoly._raw(self.alphabet, p, {w: (-c) % p for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        p = self.p
        out: Dict[Word, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = (out.get(w, 0) + c1 * c2) % p
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
        return NcPoly._raw(self.alphabet, p, out)

    def __rmul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self

    def __pow__(self, k: int) -> "NcPoly":
        if k < 0:
            raise ValueError("negative exponent")
        out = NcPoly.constant(1, self.alphabet, self.p)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: int) -> "NcPoly":
        p = self.p
        return NcPoly(self.alphabet, p, {w: v * c for w, v in self.terms.items()})

    # queries
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, FieldScalar)):
            other = self._lift(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.p == other.p and self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.p, self.alphabet, frozenset(self.terms.items())))

    def coeff(self, word: Word | str) -> int:
        if isinstance(word, str):
            word = self.alphabet.word(word)
        return self.terms.get(tuple(word), 0)

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def leading_word(self) -> Word:
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        return max(self.terms, key=deglex_key)

    def leading_coeff(self) -> int:
        return self.terms[self.leading_word()]

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Word, int]]:
        """Terms in descending degree-lexicographic order."""
        return sorted(self.terms.items(), key=lambda wc: deglex_key(wc[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for w, c in self.sorted_terms():
            c = signed(c, self.p)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not w:
                body = str(mag)
            elif mag == 1:
                body = self.alphabet.word_str(w, "*")
            else:
                body = f"{mag}*{self.alphabet.word_str(w, '*')}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"NcPoly({self}; p={self.p})"


def poly_from_terms(terms: Iterable[tuple[Word, int]], alphabet: Alphabet, p: int) -> NcPoly:
    acc: Dict[Word, int] = {}
    for w, c in terms:
        acc[w] = acc.get(w, 0) + c
    return NcPoly(alphabet, check_prime(p), acc)


def parse_poly(text: str, alphabet: Alphabet, p: int, params: Mapping[str, int] | None = None) -> NcPoly:
    from .parse import parse_poly as _parse

    return _parse(text, alphabet, p, params)
