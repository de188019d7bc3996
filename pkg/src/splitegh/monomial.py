"""Monomials in ``x1..xn`` and the degree-first lexicographic order.

``x1`` is the largest variable.  Within one degree the order is plain lex on
exponent vectors, so sorting exponent tuples descending gives descending lex.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ArgumentError, DimensionError


class Monomial(tuple):
    """Exponent vector; entry ``i`` is the exponent of ``x_{i+1}``.

    Comparison operators implement the degree-first lex order.
    """

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        m = super().__new__(cls, exponents)
        if any(e < 0 for e in m):
            raise ArgumentError(f"negative exponent in {tuple(m)}")
        return m

    @classmethod
    def var(cls, i: int, n: int) -> "Monomial":
        """The variable ``x_i`` (1-based) in ``n`` variables."""
        if not 1 <= i <= n:
            raise ArgumentError(f"variable index {i} out of range 1..{n}")
        return cls(1 if j == i - 1 else 0 for j in range(n))

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @property
    def nvars(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def exponents(self) -> tuple:
        return tuple(self)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self)

    def support(self) -> frozenset:
        """Indices ``j`` (1-based) with ``x_j`` dividing the monomial."""
        return frozenset(j + 1 for j, e in enumerate(self) if e)

    def max_var(self) -> int:
        """Largest index ``j`` with ``x_j`` dividing the monomial (0 for 1)."""
        for j in range(len(self) - 1, -1, -1):
            if self[j]:
                return j + 1
        return 0

    def divides(self, other: Sequence[int]) -> bool:
        return all(a <= b for a, b in zip(self, other))

    def __mul__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        _check_same(self, other)
        return Monomial(a + b for a, b in zip(self, other))

    def __truediv__(self, other):
        _check_same(self, other)
        if not Monomial(other).divides(self):
            raise ArgumentError(f"{format_monomial(other)} does not divide {self}")
        return Monomial(a - b for a, b in zip(self, other))

    def times_var(self, i: int) -> "Monomial":
        e = list(self)
        e[i - 1] += 1
        return Monomial(e)

    def __lt__(self, other):
        return lex_compare(self, other) < 0

    def __le__(self, other):
        return lex_compare(self, other) <= 0

    def __gt__(self, other):
        return lex_compare(self, other) > 0

    def __ge__(self, other):
        return lex_compare(self, other) >= 0

    def __eq__(self, other):
        return tuple.__eq__(self, other)

    def __ne__(self, other):
        return tuple.__ne__(self, other)

    __hash__ = tuple.__hash__

    def __repr__(self):
        return f"Monomial({format_monomial(self)})"

    def __str__(self):
        return format_monomial(self)

    def __reduce__(self):
        return (Monomial, (tuple(self),))


def _check_same(a, b):
    if len(a) != len(b):
        raise DimensionError(f"monomials in {len(a)} and {len(b)} variables")


def lex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """Return -1, 0 or 1 as ``a`` is lex-smaller, equal or lex-larger."""
    _check_same(a, b)
    da, db = sum(a), sum(b)
    if da != db:
        return -1 if da < db else 1
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    return 0


def format_monomial(m: Sequence[int]) -> str:
    parts = []
    for j, e in enumerate(m):
        if e == 1:
            parts.append(f"x{j + 1}")
        elif e > 1:
            parts.append(f"x{j + 1}^{e}")
    return "*".join(parts) if parts else "1"


def binomial(a: int, b: int) -> int:
    """``C(a, b)``, zero when ``b < 0`` or ``a < b``."""
    if b < 0 or a < b or a < 0:
        return 0
    from math import comb

    return comb(a, b)


def count_monomials(n: int, d: int) -> int:
    if d < 0:
        return 0
    return binomial(n + d - 1, d)


@lru_cache(maxsize=None)
def _all_desc(n: int, d: int) -> tuple:
    if n == 0:
        return ((),) if d == 0 else ()
    if n == 1:
        return ((d,),)
    out = []
    for e in range(d, -1, -1):
        for rest in _all_desc(n - 1, d - e):
            out.append((e,) + rest)
    return tuple(out)


def enumerate_monomials(n: int, d: int, filter: str = "all",
                        powers: Sequence[int] | None = None) -> list[Monomial]:
    """All degree-``d`` monomials in ``n`` variables, descending lex.

    ``filter`` is ``"all"``, ``"squarefree"`` or ``"outside"``; the last keeps
    monomials not divisible by any ``x_i^{powers[i]}``.
    """
    if n < 1 or d < 0:
        raise ArgumentError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    if filter == "all":
        return [Monomial(e) for e in _all_desc(n, d)]
    if filter in ("squarefree", "square-free"):
        # combinations() walks supports in lex order of index sets, which is
        # descending lex on the square-free monomials
        out = []
        for supp in combinations(range(n), d):
            e = [0] * n
            for j in supp:
                e[j] = 1
            out.append(Monomial(e))
        return out
    if filter in ("outside", "outside-pure-powers"):
        if powers is None or len(powers) != n:
            raise ArgumentError("outside-pure-powers needs one power per variable")
        return [Monomial(e) for e in outside_powers(n, d, tuple(powers))]
    raise ArgumentError(f"unknown monomial filter {filter!r}")


@lru_cache(maxsize=None)
def outside_powers(n: int, d: int, powers: tuple) -> tuple:
    """Exponent tuples of degree ``d`` with ``e_i < powers[i]``, descending lex."""
    return tuple(e for e in _all_desc(n, d) if all(x < a for x, a in zip(e, powers)))


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> dict:
    """Map exponent tuple -> column index in the descending-lex basis of S_d."""
    return {e: i for i, e in enumerate(_all_desc(n, d))}


def monomial_basis(n: int, d: int) -> tuple:
    """Exponent tuples of S_d in descending lex (the column order everywhere)."""
    if d < 0:
        return ()
    return _all_desc(n, d)
