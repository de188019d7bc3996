"""Degreewise exact linear algebra on graded ideals.

Every subspace of ``S_d`` is held in reduced row-echelon form over the
descending-lex monomial basis of ``S_d``.  Pivots are taken at the first
nonzero column, i.e. at the lex-leading monomial, so the pivot set of an
ideal component is its lex initial degree-``d`` piece and the RREF is
unique per subspace.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ArgumentError, DimensionError
from .field import QQ, Field
from .linalg import determinant
from .monomial import Monomial, count_monomials, monomial_basis, monomial_index
from .poly import Polynomial, product


@lru_cache(maxsize=None)
def _mul_table(n: int, d: int) -> tuple:
    """``table[i][c]`` = column in S_{d+1} of x_{i+1} times column ``c`` of S_d."""
    src = monomial_basis(n, d)
    idx = monomial_index(n, d + 1)
    table = []
    for i in range(n):
        row = []
        for e in src:
            e2 = list(e)
            e2[i] += 1
            row.append(idx[tuple(e2)])
        table.append(tuple(row))
    return tuple(table)


class _Echelon:
    """Mutable, always fully reduced echelon form; rows are sparse dicts."""

    __slots__ = ("ncols", "rows")

    def __init__(self, ncols: int, rows: dict | None = None):
        self.ncols = ncols
        self.rows = rows if rows is not None else {}

    def full(self) -> bool:
        return len(self.rows) == self.ncols

    def reduce(self, vec: dict) -> dict:
        rows = self.rows
        v = dict(vec)
        hits = [c for c in v if c in rows]
        for p in hits:
            a = v.pop(p)
            for c, x in rows[p].items():
                if c == p:
                    continue
                y = v.get(c)
                y = -a * x if y is None else y - a * x
                if y:
                    v[c] = y
                else:
                    v.pop(c, None)
        return v

    def insert(self, vec: dict) -> bool:
        if not vec or self.full():
            return False
        r = self.reduce(vec)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        if inv != 1:
            r = {c: x * inv for c, x in r.items()}
        for row in self.rows.values():
            a = row.get(p)
            if a is None:
                continue
            del row[p]
            for c, x in r.items():
                if c == p:
                    continue
                y = row.get(c)
                y = -a * x if y is None else y - a * x
                if y:
                    row[c] = y
                else:
                    row.pop(c, None)
        self.rows[p] = r
        return True

    def copy(self) -> "_Echelon":
        return _Echelon(self.ncols, {p: dict(r) for p, r in self.rows.items()})


class GradedBasis:
    """A subspace of ``S_d`` in canonical reduced row-echelon form.

    Treat as immutable.  Equality of subspaces is equality of the RREF.
    """

    __slots__ = ("nvars", "degree", "field", "_rows", "_key")

    def __init__(self, nvars: int, degree: int, rows: dict, field: Field = QQ):
        self.nvars = nvars
        self.degree = degree
        self.field = field
        self._rows = rows
        self._key = None

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, n: int, d: int, field: Field = QQ) -> "GradedBasis":
        return cls(n, d, {}, field)

    @classmethod
    def full(cls, n: int, d: int, field: Field = QQ) -> "GradedBasis":
        one = field.one
        return cls(n, d, {c: {c: one} for c in range(count_monomials(n, d))}, field)

    @classmethod
    def span(cls, polys: Iterable[Polynomial], n: int, d: int,
             field: Field = QQ) -> "GradedBasis":
        ech = _Echelon(count_monomials(n, d))
        for f in polys:
            ech.insert(_poly_to_vec(f, n, d))
        return cls(n, d, ech.rows, field)

    @classmethod
    def monomial_span(cls, monos: Iterable, n: int, d: int,
                      field: Field = QQ) -> "GradedBasis":
        idx = monomial_index(n, d)
        one = field.one
        rows = {}
        for m in monos:
            c = idx[tuple(m)]
            rows[c] = {c: one}
        return cls(n, d, rows, field)

    def _echelon(self) -> _Echelon:
        return _Echelon(self.ambient_dim, {p: dict(r) for p, r in self._rows.items()})

    # -- accessors -----------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def ambient_dim(self) -> int:
        return count_monomials(self.nvars, self.degree)

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    @property
    def pivots(self) -> tuple:
        return tuple(sorted(self._rows))

    def pivot_monomials(self) -> list[Monomial]:
        basis = monomial_basis(self.nvars, self.degree)
        return [Monomial(basis[p]) for p in self.pivots]

    def standard_monomials(self) -> list[Monomial]:
        """Monomials not among the pivots; their classes span the quotient."""
        basis = monomial_basis(self.nvars, self.degree)
        return [Monomial(e) for c, e in enumerate(basis) if c not in self._rows]

    @property
    def rows(self) -> tuple:
        """Canonical row tuple: ``((col, coeff), ...)`` per row, by pivot."""
        return tuple(tuple(sorted(self._rows[p].items())) for p in sorted(self._rows))

    def polynomials(self) -> list[Polynomial]:
        basis = monomial_basis(self.nvars, self.degree)
        return [Polynomial._raw(self.nvars, {basis[c]: x for c, x in self._rows[p].items()},
                                self.field)
                for p in sorted(self._rows)]

    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of ``f`` modulo this subspace (supported off pivots)."""
        basis = monomial_basis(self.nvars, self.degree)
        v = _Echelon(self.ambient_dim, self._rows).reduce(_poly_to_vec(f, self.nvars, self.degree))
        return Polynomial._raw(self.nvars, {basis[c]: x for c, x in v.items()}, self.field)

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if f.homogeneous_degree() != self.degree:
            return False
        return self.reduce(f).is_zero()

    __contains__ = contains

    def _canonical(self):
        if self._key is None:
            self._key = (self.nvars, self.degree, self.rows)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, GradedBasis):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self):
        return hash(self._canonical())

    def __repr__(self):
        return f"GradedBasis(n={self.nvars}, d={self.degree}, dim={self.dim})"


def _poly_to_vec(f: Polynomial, n: int, d: int) -> dict:
    if f.nvars != n:
        raise DimensionError(f"polynomial in {f.nvars} variables, expected {n}")
    if f.is_zero():
        return {}
    if f.homogeneous_degree() != d:
        raise DimensionError(f"{f} is not homogeneous of degree {d}")
    idx = monomial_index(n, d)
    return {idx[m]: c for m, c in f.items()}


def _same_space(u: GradedBasis, v: GradedBasis):
    if u.nvars != v.nvars or u.degree != v.degree:
        raise DimensionError(
            f"spaces in (n={u.nvars}, d={u.degree}) and (n={v.nvars}, d={v.degree})")


def sum_spaces(u: GradedBasis, v: GradedBasis) -> GradedBasis:
    _same_space(u, v)
    if u.dim < v.dim:
        u, v = v, u
    ech = u._echelon()
    for r in v._rows.values():
        if ech.full():
            break
        ech.insert(r)
    return GradedBasis(u.nvars, u.degree, ech.rows, u.field)


def intersect_dim(u: GradedBasis, v: GradedBasis) -> int:
    return u.dim + v.dim - sum_spaces(u, v).dim


def _multiply_into(v: GradedBasis, ech: _Echelon) -> None:
    n, d = v.nvars, v.degree
    table = _mul_table(n, d)
    # sparse rows first keeps fill-in low
    for p in sorted(v._rows, key=lambda p: len(v._rows[p])):
        r = v._rows[p]
        for i in range(n):
            if ech.full():
                return
            t = table[i]
            ech.insert({t[c]: x for c, x in r.items()})


def multiply_space(v: GradedBasis) -> GradedBasis:
    """``S_1 V`` in degree ``d + 1``."""
    n, d = v.nvars, v.degree
    if v.is_full():
        return GradedBasis.full(n, d + 1, v.field)
    ech = _Echelon(count_monomials(n, d + 1))
    _multiply_into(v, ech)
    return GradedBasis(n, d + 1, ech.rows, v.field)


def principal_component(q: Polynomial, d: int) -> GradedBasis:
    """``<q>_d``, the span of ``m q`` for monomials ``m`` of degree ``d - deg q``."""
    e = q.homogeneous_degree()
    if e is None:
        raise ArgumentError(f"{q} is not a nonzero homogeneous form")
    n = q.nvars
    ech = _Echelon(count_monomials(n, d))
    if d >= e:
        idx = monomial_index(n, d)
        for m in monomial_basis(n, d - e):
            ech.insert({idx[tuple(a + b for a, b in zip(k, m))]: c for k, c in q.items()})
    return GradedBasis(n, d, ech.rows, q.field)


@dataclass(frozen=True)
class HilbertFunction:
    """``H(0), ..., H(D)``; values at negative degrees read as 0."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if any(v < 0 for v in self.values):
            raise ArgumentError(f"negative Hilbert function value in {self.values}")

    @property
    def truncation(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, t):
        if isinstance(t, slice):
            return self.values[t]
        if t < 0:
            return 0
        return self.values[t]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def truncate(self, D: int) -> "HilbertFunction":
        return HilbertFunction(self.values[:D + 1])

    def is_eventually_zero(self) -> bool:
        return bool(self.values) and self.values[-1] == 0

    def __str__(self):
        return ",".join(str(v) for v in self.values)

    @classmethod
    def parse(cls, text: str) -> "HilbertFunction":
        try:
            return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x))
        except ValueError as exc:
            raise ArgumentError(f"bad Hilbert function {text!r}") from exc


@dataclass(frozen=True)
class IdealPresentation:
    """Homogeneous generators in ``nvars`` variables.

    Graded components are derived on demand and memoized per instance.
    """

    nvars: int
    generators: tuple
    field: Field = QQ
    _cache: dict = dc_field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if not isinstance(g, Polynomial):
                raise ArgumentError(f"generator {g!r} is not a Polynomial")
            if g.nvars != self.nvars:
                raise DimensionError(f"generator {g} is not in {self.nvars} variables")
            if g.field != self.field:
                raise DimensionError(f"generator {g} has field {g.field!r}")
            if g.is_zero() or not g.is_homogeneous():
                raise ArgumentError(f"generator {g} is not a nonzero homogeneous form")

    @property
    def degrees(self) -> tuple:
        return tuple(g.homogeneous_degree() for g in self.generators)

    def component(self, d: int) -> GradedBasis:
        return ideal_component(self, d)

    def hilbert(self, D: int) -> HilbertFunction:
        return hilbert_function(self, D)

    def contains(self, f: Polynomial) -> bool:
        """Membership of a homogeneous polynomial."""
        if f.is_zero():
            return True
        d = f.homogeneous_degree()
        if d is None:
            raise ArgumentError(f"{f} is not homogeneous")
        return self.component(d).contains(f)

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def ideal_component(ideal: IdealPresentation, d: int) -> GradedBasis:
    """``I_d``: built as ``S_1 I_{d-1}`` plus the degree-``d`` generators."""
    n, fld = ideal.nvars, ideal.field
    if d < 0:
        return GradedBasis.zero(n, d, fld)
    cache = ideal._cache
    if d in cache:
        return cache[d]
    start = d
    while start > 0 and (start - 1) not in cache:
        start -= 1
    gens_by_deg = {}
    for g in ideal.generators:
        gens_by_deg.setdefault(g.homogeneous_degree(), []).append(g)
    for t in range(start, d + 1):
        prev = cache.get(t - 1)
        if prev is not None and prev.is_full():
            cache[t] = GradedBasis.full(n, t, fld)
            continue
        ech = _Echelon(count_monomials(n, t))
        for g in gens_by_deg.get(t, ()):
            ech.insert(_poly_to_vec(g, n, t))
        if prev is not None:
            _multiply_into(prev, ech)
        cache[t] = GradedBasis(n, t, ech.rows, fld)
    return cache[d]


def ideal_component_direct(ideal: IdealPresentation, d: int) -> GradedBasis:
    """``I_d`` as the span of all ``m g``; no reuse of lower components."""
    n = ideal.nvars
    ech = _Echelon(count_monomials(n, d))
    if d < 0:
        return GradedBasis.zero(n, d, ideal.field)
    idx = monomial_index(n, d)
    for g in ideal.generators:
        e = g.homogeneous_degree()
        if e > d:
            continue
        for m in monomial_basis(n, d - e):
            if ech.full():
                break
            ech.insert({idx[tuple(a + b for a, b in zip(k, m))]: c for k, c in g.items()})
    return GradedBasis(n, d, ech.rows, ideal.field)


def _direct_codims(ideal: IdealPresentation, D: int):
    for t in range(D + 1):
        comp = ideal_component_direct(ideal, t)
        yield comp.codim
        if comp.is_full():
            # S_1 S_t = S_{t+1}: everything above is in the ideal too
            yield from (0 for _ in range(t + 1, D + 1))
            return


def hilbert_function(ideal: IdealPresentation, D: int) -> HilbertFunction:
    if D < 0:
        raise ArgumentError("truncation degree must be >= 0")
    return HilbertFunction(tuple(ideal_component(ideal, t).codim for t in range(D + 1)))


def hilbert_function_direct(ideal: IdealPresentation, D: int) -> HilbertFunction:
    if D < 0:
        raise ArgumentError("truncation degree must be >= 0")
    return HilbertFunction(tuple(_direct_codims(ideal, D)))


def complete_intersection_hilbert(powers: Sequence[int], D: int) -> HilbertFunction:
    """Hilbert function of ``S/<x_i^{a_i}>``: coefficients of prod (1+t+...+t^{a_i-1})."""
    coeffs = [1]
    for a in powers:
        nxt = [0] * (len(coeffs) + a - 1)
        for i, c in enumerate(coeffs):
            for j in range(a):
                nxt[i + j] += c
        coeffs = nxt
    return HilbertFunction(tuple(coeffs[t] if t < len(coeffs) else 0 for t in range(D + 1)))


def socle_bound(powers: Sequence[int]) -> int:
    return sum(a - 1 for a in powers)


def default_truncation(powers: Sequence[int]) -> int:
    """One past the top nonzero degree of the complete intersection."""
    return socle_bound(powers) + 1


def _check_linear(qs):
    for q in qs:
        if not isinstance(q, Polynomial) or not q.is_linear_form():
            raise ArgumentError(f"{q} is not a nonzero linear form")


def colon_component(ideal: IdealPresentation, qs: Sequence[Polynomial], d: int) -> GradedBasis:
    """``(I : q_1 ... q_j)_d`` as the kernel of multiplication into ``S/I``."""
    _check_linear(qs)
    n, fld = ideal.nvars, ideal.field
    if not qs:
        return ideal_component(ideal, d)
    if d < 0:
        return GradedBasis.zero(n, d, fld)
    j = len(qs)
    target = ideal_component(ideal, d + j)
    if target.is_full():
        return GradedBasis.full(n, d, fld)
    Q = product(qs, n, fld)
    src = monomial_basis(n, d)
    idx = monomial_index(n, d + j)
    red = _Echelon(target.ambient_dim, target._rows)
    # transpose: one row per standard column of the target, entries over S_d
    trans: dict = {}
    for col, m in enumerate(src):
        img = red.reduce({idx[tuple(a + b for a, b in zip(k, m))]: c for k, c in Q.items()})
        for c, x in img.items():
            trans.setdefault(c, {})[col] = x
    small = _Echelon(len(src))
    for r in trans.values():
        small.insert(r)
    piv = small.rows
    kernel = _Echelon(len(src))
    one = fld.one
    for f in range(len(src)):
        if f in piv:
            continue
        vec = {f: one}
        for p, r in piv.items():
            x = r.get(f)
            if x:
                vec[p] = -x
        kernel.insert(vec)
    return GradedBasis(n, d, kernel.rows, fld)


def generators_from_components(components: Sequence[GradedBasis]) -> list[Polynomial]:
    """Homogeneous generators of the ideal whose degree-``t`` part is
    ``components[t]``, correct through the last given degree.

    Only elements not already in ``S_1`` times the previous component are kept.
    """
    gens = []
    prev = None
    for comp in components:
        if prev is None or comp.degree == 0:
            ech = _Echelon(comp.ambient_dim)
        else:
            ech = multiply_space(prev)._echelon()
        for p in sorted(comp._rows):
            if ech.full():
                break
            r = comp._rows[p]
            if ech.insert(r):
                basis = monomial_basis(comp.nvars, comp.degree)
                gens.append(Polynomial._raw(comp.nvars, {basis[c]: x for c, x in r.items()},
                                            comp.field))
        prev = comp
    return gens


def colon_ideal(ideal: IdealPresentation, qs: Sequence[Polynomial],
                maxdeg: int) -> IdealPresentation:
    """A presentation of ``(I : q_1 ... q_j)`` that is exact through ``maxdeg``."""
    comps = [colon_component(ideal, qs, t) for t in range(maxdeg + 1)]
    out = IdealPresentation(ideal.nvars, tuple(generators_from_components(comps)), ideal.field)
    for t, c in enumerate(comps):
        out._cache[t] = c
    return out


def add_principal(ideal: IdealPresentation, q: Polynomial) -> IdealPresentation:
    """``I + <q>``."""
    if q.is_zero() or not q.is_homogeneous():
        raise ArgumentError(f"{q} is not a nonzero homogeneous form")
    return IdealPresentation(ideal.nvars, ideal.generators + (q,), ideal.field)


def truncated_ideal(ideal: IdealPresentation, maxdeg: int) -> IdealPresentation:
    """Presentation agreeing with ``ideal`` through ``maxdeg`` with few generators."""
    comps = [ideal_component(ideal, t) for t in range(maxdeg + 1)]
    out = IdealPresentation(ideal.nvars, tuple(generators_from_components(comps)), ideal.field)
    for t, c in enumerate(comps):
        out._cache[t] = c
    return out


def linear_quotient_map(q: Polynomial) -> tuple[list[Polynomial], int]:
    """Images of ``x_1..x_n`` in ``n - 1`` variables realizing ``S/<q>``.

    The pivot is the last variable ``x_p`` with a nonzero coefficient in ``q``;
    it is solved for in terms of the others, which are renumbered in order.
    Returns ``(images, p)``.
    """
    if not isinstance(q, Polynomial) or not q.is_linear_form():
        raise ArgumentError(f"{q} is not a nonzero linear form")
    n, fld = q.nvars, q.field
    coeffs = q.linear_coefficients()
    p = max(j for j in range(n) if coeffs[j])
    m = n - 1
    images = []
    for j in range(n):
        if j == p:
            lin = [fld.zero] * m
            for k in range(n):
                if k != p and coeffs[k]:
                    lin[k if k < p else k - 1] = -coeffs[k] / coeffs[p]
            images.append(Polynomial.linear(lin, fld) if m else Polynomial(0, {}, fld))
        else:
            images.append(Polynomial.var(j + 1 if j < p else j, m, fld))
    return images, p + 1


def quotient_by_linear(ideal: IdealPresentation, q: Polynomial,
                       check: bool = True) -> IdealPresentation:
    """Image of ``I`` in ``S/<q>`` identified with a ring in ``n - 1`` variables.

    ``q`` must lie in ``I``; then ``H(S/I)`` is preserved.
    """
    if q.is_zero():
        raise ArgumentError("cannot quotient by the zero form")
    images, _ = linear_quotient_map(q)
    if check and not ideal.contains(q):
        raise ArgumentError(f"{q} is not in the ideal; add it first")
    gens = []
    for g in ideal.generators:
        h = g.substitute(images, ideal.nvars - 1)
        if not h.is_zero():
            gens.append(h)
    return IdealPresentation(ideal.nvars - 1, tuple(gens), ideal.field)


def apply_linear_change(f: Polynomial, matrix) -> Polynomial:
    """Substitute ``x_i -> sum_j C[i][j] x_j``; ``C`` must be invertible."""
    n, fld = f.nvars, f.field
    rows = [[fld(x) for x in row] for row in matrix]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise DimensionError(f"need an {n}x{n} matrix")
    if not determinant(rows, fld):
        raise ArgumentError("linear change of coordinates is singular")
    images = [Polynomial.linear(r, fld) for r in rows]
    return f.substitute(images, n)
