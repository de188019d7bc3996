"""Regular sequences of products of linear forms.

Two shapes are handled.  :class:`QuadraticSplitSequence` is the special
family ``f_i = x_i * l_i`` with ``l_i = sum_j A[i][j] x_j``; regularity is
decided by the principal minors of ``A`` and every quotient class has a
unique square-free representative.  :class:`SplitSequence` is the general
case of forms given as lists of linear factors.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import ArgumentError, DimensionError
from .field import QQ, Field
from .graded import (GradedBasis, IdealPresentation, complete_intersection_hilbert,
                     ideal_component, multiply_space, socle_bound)
from .linalg import determinant, principal_submatrix, solve
from .monomial import Monomial, binomial, enumerate_monomials
from .poly import Polynomial, product


@dataclass(frozen=True)
class SplitSequence:
    """``f_i = factors[i][0] * ... * factors[i][-1]`` with ascending degrees."""

    nvars: int
    factors: tuple
    field: Field = QQ

    def __post_init__(self):
        facs = tuple(tuple(fl) for fl in self.factors)
        object.__setattr__(self, "factors", facs)
        if len(facs) != self.nvars:
            raise ArgumentError(f"need {self.nvars} forms, got {len(facs)}")
        for i, fl in enumerate(facs, 1):
            if not fl:
                raise ArgumentError(f"f_{i} has no factors")
            for q in fl:
                if q.nvars != self.nvars or q.field != self.field:
                    raise DimensionError(f"factor {q} of f_{i} lives in another ring")
                if not q.is_linear_form():
                    raise ArgumentError(f"factor {q} of f_{i} is not a nonzero linear form")
        degs = self.degrees
        if degs and degs[0] < 2:
            raise ArgumentError(f"every form needs degree >= 2, got {degs}")
        if any(a > b for a, b in zip(degs, degs[1:])):
            raise ArgumentError(f"degrees must be ascending, got {degs}")

    @property
    def degrees(self) -> tuple:
        return tuple(len(fl) for fl in self.factors)

    @cached_property
    def forms(self) -> tuple:
        return tuple(product(fl, self.nvars, self.field) for fl in self.factors)

    @property
    def last_factors(self) -> tuple:
        """``q_1, ..., q_s`` with ``f_n = q_1 ... q_s``."""
        return self.factors[-1]

    def ideal(self) -> IdealPresentation:
        return IdealPresentation(self.nvars, self.forms, self.field)

    def truncation(self) -> int:
        return socle_bound(self.degrees) + 1

    @classmethod
    def pure_powers(cls, powers: Sequence[int], field: Field = QQ) -> "SplitSequence":
        n = len(powers)
        return cls(n, tuple((Polynomial.var(i + 1, n, field),) * a
                            for i, a in enumerate(powers)), field)

    def __str__(self):
        return "; ".join("*".join(f"({q})" for q in fl) for fl in self.factors)


def is_regular_minors(matrix, field: Field = QQ) -> tuple[bool, tuple | None]:
    """Check every principal minor of a square matrix for nonvanishing.

    Returns ``(True, None)`` or ``(False, subset)`` where ``subset`` is the
    lexicographically first 1-based index set whose minor vanishes.  All
    ``2^n - 1`` minors are examined, so this is exponential in ``n``.
    """
    rows = [[field(x) for x in r] for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ArgumentError("matrix must be square")

    # depth-first preorder visits index tuples in lexicographic order
    def walk(prefix):
        start = prefix[-1] + 1 if prefix else 0
        for j in range(start, n):
            s = prefix + (j,)
            if not determinant(principal_submatrix(rows, s), field):
                return s
            bad = walk(s)
            if bad is not None:
                return bad
        return None

    bad = walk(())
    if bad is None:
        return True, None
    return False, tuple(j + 1 for j in bad)


def is_regular_general(seq: SplitSequence) -> bool:
    """``n`` forms in ``n`` variables are regular iff the quotient is Artinian.

    The quotient vanishes from one degree past the socle bound on, exactly
    when the sequence is regular.
    """
    return ideal_component(seq.ideal(), socle_bound(seq.degrees) + 1).is_full()


class QuadraticSplitSequence:
    """``f_i = x_i * (sum_j A[i][j] x_j)``."""

    def __init__(self, matrix, field: Field = QQ, verify: bool = True):
        self.field = field
        self.matrix = tuple(tuple(field(x) for x in row) for row in matrix)
        self.n = len(self.matrix)
        if any(len(r) != self.n for r in self.matrix):
            raise ArgumentError("matrix must be square")
        self.verified = False
        self.failing_subset = None
        if verify:
            self.verified, self.failing_subset = is_regular_minors(self.matrix, field)
        self._reduced: dict = {}

    @property
    def nvars(self) -> int:
        return self.n

    @cached_property
    def linear_forms(self) -> tuple:
        return tuple(Polynomial.linear(row, self.field) for row in self.matrix)

    @cached_property
    def forms(self) -> tuple:
        n = self.n
        return tuple(Polynomial.var(i + 1, n, self.field) * l
                     for i, l in enumerate(self.linear_forms))

    def as_split(self) -> SplitSequence:
        n = self.n
        return SplitSequence(n, tuple((Polynomial.var(i + 1, n, self.field), l)
                                      for i, l in enumerate(self.linear_forms)), self.field)

    def ideal(self) -> IdealPresentation:
        return IdealPresentation(self.n, self.forms, self.field)

    @cached_property
    def P(self) -> IdealPresentation:
        return self.ideal()

    def squares_ideal(self) -> IdealPresentation:
        """``M = <x_1^2, ..., x_n^2>``."""
        n = self.n
        return IdealPresentation(n, tuple(Polynomial.var(i + 1, n, self.field) ** 2
                                          for i in range(n)), self.field)

    @classmethod
    def from_split(cls, seq: SplitSequence, verify: bool = True) -> "QuadraticSplitSequence":
        """Recognize ``f_i = c x_i * l`` among the factor lists; else raise."""
        n, fld = seq.nvars, seq.field
        rows = []
        for i, fl in enumerate(seq.factors):
            if len(fl) != 2:
                raise ArgumentError(f"f_{i + 1} is not quadratic")
            xi = Polynomial.var(i + 1, n, fld)
            for a, b in (fl, fl[::-1]):
                ca = a.linear_coefficients()
                if all(not c for j, c in enumerate(ca) if j != i) and ca[i]:
                    rows.append([ca[i] * c for c in b.linear_coefficients()])
                    break
            else:
                raise ArgumentError(f"f_{i + 1} has no factor proportional to {xi}")
        return cls(rows, fld, verify)

    def __repr__(self):
        return f"QuadraticSplitSequence({[list(map(str, r)) for r in self.matrix]})"

    # -- square-free normal form --------------------------------------------
    def _reduce_monomial(self, u: tuple) -> dict:
        """Square-free combination congruent to ``u`` mod P, as {mono: coeff}."""
        if u in self._reduced:
            return self._reduced[u]
        fld = self.field
        if all(e <= 1 for e in u):
            out = {u: fld.one}
        else:
            # peel one variable off, reduce the cofactor, then fix each
            # product x_k * w that picked up a square
            k = max(j for j, e in enumerate(u) if e >= 2)
            rest = list(u)
            rest[k] -= 1
            out = {}
            for w, c in self._reduce_monomial(tuple(rest)).items():
                for m, x in self._times_var(k, w).items():
                    y = out.get(m, fld.zero) + c * x
                    if y:
                        out[m] = y
                    else:
                        out.pop(m, None)
        self._reduced[u] = out
        return out

    def _times_var(self, k: int, w: tuple) -> dict:
        """``x_k * w`` reduced mod P, for square-free ``w`` (0-based ``k``)."""
        fld = self.field
        if not w[k]:
            m = list(w)
            m[k] = 1
            return {tuple(m): fld.one}
        supp = [j for j, e in enumerate(w) if e]
        # find c with sum_{j in supp} c_j l_j = x_k + (terms outside supp)
        sub = [[self.matrix[j][col] for j in supp] for col in supp]
        rhs = [fld.one if col == k else fld.zero for col in supp]
        c = solve(sub, rhs, fld)
        # x_k * w == -sum_{col not in supp} e_col x_col * w  (mod P)
        out = {}
        for col in range(self.n):
            if w[col]:
                continue
            e = sum((c[i] * self.matrix[j][col] for i, j in enumerate(supp)), fld.zero)
            if e:
                m = list(w)
                m[col] = 1
                out[tuple(m)] = -e
        return out


def squarefree_reduce(g: Polynomial, seq: QuadraticSplitSequence,
                      verify: bool = True) -> Polynomial:
    """The unique square-free combination ``h`` with ``g - h`` in ``P``.

    Terms are processed in descending lex order.  With ``verify`` the
    membership ``g - h in P`` is re-checked with the graded engine.
    """
    if g.nvars != seq.n or g.field != seq.field:
        raise DimensionError("polynomial and sequence live in different rings")
    if g.is_zero():
        return g
    d = g.homogeneous_degree()
    if d is None:
        raise ArgumentError(f"{g} is not homogeneous")
    if d > seq.n:
        raise ArgumentError(f"degree {d} exceeds n = {seq.n}; every such form lies in P")
    if not seq.verified:
        ok, bad = is_regular_minors(seq.matrix, seq.field)
        if not ok:
            raise ArgumentError(f"sequence is not regular (minor {set(bad)} vanishes)")
        seq.verified = True
    fld = seq.field
    out: dict = {}
    for m in sorted(g.terms, key=Monomial, reverse=True):
        c = g.coefficient(m)
        for w, x in seq._reduce_monomial(m).items():
            y = out.get(w, fld.zero) + c * x
            if y:
                out[w] = y
            else:
                out.pop(w, None)
    h = Polynomial._raw(seq.n, out, fld)
    if verify and not seq.P.contains(g - h):
        from .errors import InternalInvariantError

        raise InternalInvariantError(f"reduction of {g} gave {h}, not congruent mod P")
    return h


def s1_growth_formula(n: int, d: int, ws: Sequence) -> int:
    """Closed form for ``dim S_1(P_d + span ws)`` when ``ws`` is the initial
    lex segment of square-free degree-``d`` monomials."""
    if not 2 <= d <= n:
        raise ArgumentError(f"formula needs 2 <= d <= n, got d={d}, n={n}")
    ws = [Monomial(w) for w in ws]
    seg = enumerate_monomials(n, d, "squarefree")
    if ws != seg[:len(ws)]:
        raise ArgumentError("monomials are not an initial lex segment of square-free ones")
    return (binomial(d + n, d + 1) - binomial(n, d + 1)
            + sum(n - w.max_var() for w in ws))


def s1_growth_bruteforce(P: IdealPresentation, d: int, ws: Sequence) -> int:
    """``dim S_1(P_d + span ws)`` by direct elimination."""
    from .graded import sum_spaces

    span = GradedBasis.monomial_span(ws, P.nvars, d, P.field)
    return multiply_space(sum_spaces(ideal_component(P, d), span)).dim


def check_complete_intersection(seq, D: int | None = None) -> bool:
    """``H(S/P) == H(S/<x_i^{a_i}>)`` through ``D``."""
    if isinstance(seq, QuadraticSplitSequence):
        degs = (2,) * seq.n
    else:
        degs = seq.degrees
    D = socle_bound(degs) + 1 if D is None else D
    return seq.ideal().hilbert(D) == complete_intersection_hilbert(degs, D)
