"""Exact coefficient fields: the rationals and prime fields.

Rationals are ``gmpy2.mpq``; ``fractions.Fraction`` is accepted on input.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from gmpy2 import mpq

from .errors import ArgumentError


_MPQ = type(mpq(0))
_RATIONAL = (Fraction, _MPQ)


class Fp:
    """Element of the prime field of order ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ArgumentError("mixing different prime fields")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, _RATIONAL):
            return int(other.numerator) * pow(int(other.denominator), -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return Fp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o, self.p) / self

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, (int,) + _RATIONAL):
            o = self._coerce(other)
            return self.v == o % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        # symmetric representative reads better in printed polynomials
        v = self.v if self.v <= self.p // 2 else self.v - self.p
        return str(v)


class Field:
    """A coefficient field. Instances are callables that coerce numbers."""

    characteristic = 0

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def spec(self) -> str:
        raise NotImplementedError


class Rationals(Field):
    characteristic = 0

    def __call__(self, x):
        if type(x) is _MPQ:
            return x
        if isinstance(x, Fp):
            raise ArgumentError("cannot coerce a prime-field element to a rational")
        if isinstance(x, str):
            return mpq(Fraction(x))
        return mpq(x)

    def spec(self):
        return "rationals"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or not _is_prime(p):
            raise ArgumentError(f"{p} is not prime")
        self.characteristic = p

    @property
    def p(self):
        return self.characteristic

    def __call__(self, x):
        if isinstance(x, Fp):
            if x.p != self.p:
                raise ArgumentError("mixing different prime fields")
            return x
        if isinstance(x, _RATIONAL):
            num, den = int(x.numerator), int(x.denominator)
            if den % self.p == 0:
                raise ArgumentError(f"denominator of {x} vanishes mod {self.p}")
            return Fp(num * pow(den, -1, self.p), self.p)
        return Fp(int(x), self.p)

    def spec(self):
        return f"prime {self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(text: str) -> Field:
    """Parse ``"rationals"`` or ``"prime <p>"``."""
    words = text.split()
    if words in (["rationals"], ["QQ"]):
        return QQ
    if len(words) == 2 and words[0] == "prime" and words[1].isdigit():
        return GF(int(words[1]))
    raise ArgumentError(f"unknown field {text!r}")


def _is_prime(p: int) -> bool:
    if p < 4:
        return p >= 2
    if p % 2 == 0:
        return False
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True
