"""Lex-plus-powers ideals and the Kruskal-Katona bound.

An ideal ``M + L`` with ``M = <x_1^{a_1}, ..., x_n^{a_n}>`` is stored degree
by degree: ``segments[d]`` lists the monomials of ``L_d`` that lie outside
``M``, which must be the lex-largest ones of ``(S/M)_d``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ArgumentError, NotRealizableError
from .graded import GradedBasis, HilbertFunction
from .macaulay import macaulay_upper
from .monomial import Monomial, binomial, format_monomial, monomial_basis, outside_powers


def _divisible_by_power(m, powers) -> bool:
    return any(e >= a for e, a in zip(m, powers))


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal generated by monomials; the generator list is kept minimal."""

    nvars: int
    generators: tuple

    def __post_init__(self):
        gens = sorted({tuple(g) for g in self.generators}, key=Monomial)
        minimal = []
        for g in gens:
            # ascending order: any divisor of g comes first
            if not any(all(a <= b for a, b in zip(h, g)) for h in minimal):
                minimal.append(g)
        minimal = sorted(minimal, key=lambda g: (sum(g), [-e for e in g]))
        object.__setattr__(self, "generators", tuple(minimal))

    def contains(self, m) -> bool:
        m = tuple(m)
        return any(all(a <= b for a, b in zip(g, m)) for g in self.generators)

    def component(self, d: int) -> list:
        """Exponent tuples of degree ``d`` in the ideal, descending lex."""
        if d < 0:
            return []
        return [e for e in monomial_basis(self.nvars, d) if self.contains(e)]

    def hilbert(self, D: int) -> HilbertFunction:
        return HilbertFunction(tuple(
            len(monomial_basis(self.nvars, t)) - len(self.component(t)) for t in range(D + 1)))

    def graded_component(self, d: int, field=None) -> GradedBasis:
        from .field import QQ

        return GradedBasis.monomial_span(self.component(d), self.nvars, d, field or QQ)

    def generator_strings(self) -> list[str]:
        return [format_monomial(g) for g in self.generators]

    def __str__(self):
        return "<" + ", ".join(self.generator_strings()) + ">"


def lexsegment(n: int, powers: Sequence[int], d: int, t: int) -> list[Monomial]:
    """The ``t`` lex-largest degree-``d`` monomials outside the pure powers."""
    if len(powers) != n:
        raise ArgumentError("need one power per variable")
    pool = outside_powers(n, d, tuple(powers)) if d >= 0 else ()
    if not 0 <= t <= len(pool):
        raise ArgumentError(f"segment size {t} out of range 0..{len(pool)}")
    return [Monomial(e) for e in pool[:t]]


@dataclass(frozen=True)
class LppIdeal:
    """``<x_i^{a_i}> + L`` recorded through degree ``len(segments) - 1``."""

    nvars: int
    powers: tuple
    segments: tuple

    def __post_init__(self):
        powers = tuple(self.powers)
        segs = tuple(tuple(tuple(m) for m in seg) for seg in self.segments)
        object.__setattr__(self, "powers", powers)
        object.__setattr__(self, "segments", segs)
        if len(powers) != self.nvars:
            raise ArgumentError("need one power per variable")
        for d, seg in enumerate(segs):
            pool = outside_powers(self.nvars, d, powers)
            if seg != pool[:len(seg)]:
                raise ArgumentError(f"degree-{d} part is not a lexsegment of (S/M)_{d}")
        bad = self.ideal_violation()
        if bad is not None:
            raise ArgumentError(f"not an ideal: S_1 L_{bad} escapes degree {bad + 1}")

    @property
    def truncation(self) -> int:
        return len(self.segments) - 1

    def ideal_violation(self) -> int | None:
        """First ``d`` with ``S_1 L_d`` not inside ``M_{d+1} + L_{d+1}``."""
        for d in range(len(self.segments) - 1):
            nxt = set(self.segments[d + 1])
            for m in self.segments[d]:
                for i in range(self.nvars):
                    e = list(m)
                    e[i] += 1
                    e = tuple(e)
                    if e not in nxt and not _divisible_by_power(e, self.powers):
                        return d
        return None

    def hilbert(self) -> HilbertFunction:
        return HilbertFunction(tuple(
            len(outside_powers(self.nvars, d, self.powers)) - len(seg)
            for d, seg in enumerate(self.segments)))

    def segment(self, d: int) -> list[Monomial]:
        return [Monomial(m) for m in self.segments[d]]

    def component(self, d: int) -> list:
        """All degree-``d`` monomials of the ideal (``d`` within truncation)."""
        if d > self.truncation:
            raise ArgumentError(f"degree {d} beyond truncation {self.truncation}")
        seg = set(self.segments[d])
        return [e for e in monomial_basis(self.nvars, d)
                if e in seg or _divisible_by_power(e, self.powers)]

    def contains(self, m) -> bool:
        m = tuple(m)
        if _divisible_by_power(m, self.powers):
            return True
        d = sum(m)
        if d <= self.truncation:
            return m in set(self.segments[d])
        return self.to_monomial_ideal().contains(m)

    def minimal_generators(self) -> list[Monomial]:
        """Pure powers, then segment monomials not in ``S_1`` of the degree below."""
        n = self.nvars
        gens = [tuple(a if j == i else 0 for j in range(n)) for i, a in enumerate(self.powers)]
        for d, seg in enumerate(self.segments):
            below = set(self.segments[d - 1]) if d > 0 else set()
            for m in seg:
                if not any(m[i] and tuple(e - (j == i) for j, e in enumerate(m)) in below
                           for i in range(n)):
                    gens.append(m)
        # a low-degree segment may swallow a pure power
        return [Monomial(g) for g in MonomialIdeal(n, tuple(gens)).generators]

    def to_monomial_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.nvars, tuple(self.minimal_generators()))

    def generator_strings(self) -> list[str]:
        return [format_monomial(g) for g in self.minimal_generators()]

    def __str__(self):
        return "<" + ", ".join(self.generator_strings()) + ">"

    @classmethod
    def pure_powers(cls, powers: Sequence[int], D: int) -> "LppIdeal":
        return cls(len(powers), tuple(powers), ((),) * (D + 1))

    @classmethod
    def from_monomial_ideal(cls, ideal: MonomialIdeal, powers: Sequence[int],
                            D: int) -> "LppIdeal":
        """Recognize an ideal as lex-plus-powers through ``D``; raise otherwise."""
        powers = tuple(powers)
        for i, a in enumerate(powers):
            e = tuple(a if j == i else 0 for j in range(ideal.nvars))
            if not ideal.contains(e):
                raise ArgumentError(f"x{i + 1}^{a} is not in the ideal")
        segs = []
        for d in range(D + 1):
            segs.append(tuple(e for e in outside_powers(ideal.nvars, d, powers)
                              if ideal.contains(e)))
        return cls(ideal.nvars, powers, tuple(segs))


def lpp_realize(H: HilbertFunction | Sequence[int], powers: Sequence[int]) -> LppIdeal:
    """The lex-plus-powers ideal with Hilbert function ``H`` through its truncation.

    Raises :class:`NotRealizableError` if no ideal containing the pure powers
    has this Hilbert function.
    """
    H = H if isinstance(H, HilbertFunction) else HilbertFunction(tuple(H))
    powers = tuple(powers)
    n = len(powers)
    if n < 1:
        raise ArgumentError("need at least one variable")
    if not H.values or H[0] != 1:
        raise ArgumentError("a proper graded ideal has H(0) = 1")
    segs = []
    for d, h in enumerate(H):
        pool = outside_powers(n, d, powers)
        size = len(pool) - h
        if size < 0:
            raise NotRealizableError(
                f"H({d}) = {h} exceeds {len(pool)}, the dimension of (S/M)_{d}")
        segs.append(pool[:size])
    try:
        return LppIdeal(n, powers, tuple(segs))
    except ArgumentError as exc:
        raise NotRealizableError(f"not realizable over the Clements-Lindstrom ring: {exc}")


def kk_bound_check(H: HilbertFunction | Sequence[int]) -> tuple[bool, int | None]:
    """``H(d+1) <= H(d)^(d)`` for ``1 <= d < D``; returns the first failing ``d``."""
    vals = tuple(H)
    for d in range(1, len(vals) - 1):
        if vals[d + 1] > macaulay_upper(vals[d], d):
            return False, d
    return True, None


def squarefree_kk_ideal(H: HilbertFunction | Sequence[int], n: int) -> LppIdeal:
    """Squares plus lex-first square-free monomials, sized to match ``H``."""
    H = H if isinstance(H, HilbertFunction) else HilbertFunction(tuple(H))
    if not H.values or H[0] != 1:
        raise NotRealizableError("a proper graded ideal has H(0) = 1")
    for d, h in enumerate(H):
        if h > binomial(n, d):
            raise NotRealizableError(f"H({d}) = {h} exceeds C({n},{d})")
    ok, bad = kk_bound_check(H)
    if not ok:
        raise NotRealizableError(
            f"bound violated at d={bad}: {H[bad + 1]} > {macaulay_upper(H[bad], bad)}")
    return lpp_realize(H, (2,) * n)


def realizable(H: Iterable[int], powers: Sequence[int]) -> bool:
    try:
        lpp_realize(HilbertFunction(tuple(H)), powers)
    except NotRealizableError:
        return False
    return True
