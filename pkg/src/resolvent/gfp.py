"""Exact arithmetic in the prime field GF(p)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"characteristic must be a prime, got {p!r}")
    return p


def inv_mod(a: int, p: int) -> int:
    """Inverse of ``a`` modulo the prime ``p`` by extended Euclid."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse in GF({p})")
    old_r, r = a, p
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    return old_s % p


@dataclass(frozen=True)
class FieldScalar:
    """A residue ``value`` in ``[0, p)``."""

    value: int
    p: int

    def __post_init__(self) -> None:
        check_prime(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldScalar):
            if other.p != self.p:
                raise ValueError(f"mixed characteristics {self.p} and {other.p}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldScalar(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldScalar(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldScalar(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldScalar(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldScalar(-self.value, self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldScalar(self.value * inv_mod(o, self.p), self.p)

    def __pow__(self, k: int):
        if k < 0:
            return inv(self) ** (-k)
        return FieldScalar(pow(self.value, k, self.p), self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldScalar):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.p == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.p))

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.p})"


def inv(a: FieldScalar) -> FieldScalar:
    return FieldScalar(inv_mod(a.value, a.p), a.p)


def signed(c: int, p: int) -> int:
    """Representative of ``c`` in ``(-p/2, p/2]``, for printing."""
    c %= p
    return c - p if c > p // 2 else c
