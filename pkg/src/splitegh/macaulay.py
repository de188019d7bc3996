"""Macaulay expansions and the Kruskal-Katona growth bound ``p^(q)``."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ArgumentError
from .monomial import binomial


@dataclass(frozen=True)
class MacaulayExpansion:
    """``p = C(s_q, q) + C(s_{q-1}, q-1) + ...`` with ``s_q > s_{q-1} > ...``.

    ``terms`` holds ``(s_j, j)`` pairs from ``j = q`` downwards; trailing terms
    whose binomial is zero are omitted.
    """

    p: int
    q: int
    terms: tuple

    @property
    def tops(self) -> tuple:
        return tuple(s for s, _ in self.terms)

    def value(self) -> int:
        return sum(binomial(s, j) for s, j in self.terms)

    def upper(self) -> int:
        return sum(binomial(s, j + 1) for s, j in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"C({s},{j})" for s, j in self.terms)


def macaulay_expansion(p: int, q: int) -> MacaulayExpansion:
    if p < 0 or q < 1:
        raise ArgumentError(f"need p >= 0 and q >= 1, got p={p}, q={q}")
    terms = []
    rest = p
    j = q
    while rest > 0 and j >= 1:
        # largest s with C(s, j) <= rest
        s = j
        while binomial(s + 1, j) <= rest:
            s += 1
        terms.append((s, j))
        rest -= binomial(s, j)
        j -= 1
    assert rest == 0
    return MacaulayExpansion(p, q, tuple(terms))


def macaulay_upper(p: int, q: int) -> int:
    """``p^(q)``; ``0^(q) = 0``."""
    return macaulay_expansion(p, q).upper()
