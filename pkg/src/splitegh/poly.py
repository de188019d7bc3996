"""Sparse multivariate polynomials with exact coefficients."""
from __future__ import annotations

from typing import Iterable, Mapping

from .errors import ArgumentError, DimensionError
from .field import QQ, Field
from .monomial import Monomial, format_monomial


class Polynomial:
    """Immutable polynomial in ``x1..xn``.

    ``terms`` maps exponent tuples to nonzero field elements.  Zero
    coefficients are never stored, so the key set is the support.
    """

    __slots__ = ("nvars", "field", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping | Iterable = (), field: Field = QQ):
        self.nvars = nvars
        self.field = field
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for m, c in items:
            m = tuple(m)
            if len(m) != nvars:
                raise DimensionError(f"monomial {m} is not in {nvars} variables")
            c = field(c)
            if m in clean:
                c = c + clean[m]
            if c:
                clean[m] = c
            else:
                clean.pop(m, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms, field):
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.nvars = nvars
        p.field = field
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def var(cls, i: int, n: int, field: Field = QQ) -> "Polynomial":
        return cls._raw(n, {tuple(Monomial.var(i, n)): field.one}, field)

    @classmethod
    def constant(cls, c, n: int, field: Field = QQ) -> "Polynomial":
        return cls(n, {(0,) * n: c}, field)

    @classmethod
    def monomial(cls, m, n: int | None = None, coeff=1, field: Field = QQ) -> "Polynomial":
        m = tuple(m)
        return cls(len(m) if n is None else n, {m: coeff}, field)

    @classmethod
    def linear(cls, coeffs, field: Field = QQ) -> "Polynomial":
        """``sum coeffs[j] * x_{j+1}``."""
        n = len(coeffs)
        return cls(n, ((tuple(1 if k == j else 0 for k in range(n)), c)
                       for j, c in enumerate(coeffs)), field)

    # -- accessors -----------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> list[Monomial]:
        return sorted((Monomial(m) for m in self._terms), reverse=True)

    def coefficient(self, m) -> object:
        return self._terms.get(tuple(m), self.field.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms, or ``None`` (also for zero)."""
        degs = {sum(m) for m in self._terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.homogeneous_degree() is not None

    def is_linear_form(self) -> bool:
        return self.homogeneous_degree() == 1

    def linear_coefficients(self) -> list:
        """Coefficient vector of a linear form."""
        if not self.is_linear_form():
            raise ArgumentError(f"{self} is not a nonzero linear form")
        out = [self.field.zero] * self.nvars
        for m, c in self._terms.items():
            out[m.index(1)] = c
        return out

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ArgumentError("zero polynomial has no leading monomial")
        return max(Monomial(m) for m in self._terms)

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.nvars != self.nvars:
            raise DimensionError(f"rings with {self.nvars} and {other.nvars} variables")
        if other.field != self.field:
            raise DimensionError(f"fields {self.field!r} and {other.field!r} differ")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(other, self.nvars, self.field)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial._raw(self.nvars, out, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {m: -c for m, c in self._terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "Polynomial":
        c = self.field(c)
        if not c:
            return Polynomial._raw(self.nvars, {}, self.field)
        return Polynomial._raw(self.nvars, {m: c * v for m, v in self._terms.items()}, self.field)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m)
                out[m] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial._raw(self.nvars, {m: c for m, c in out.items() if c}, self.field)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ArgumentError("negative power")
        out = Polynomial.constant(1, self.nvars, self.field)
        for _ in range(k):
            out = out * self
        return out

    def mul_monomial(self, m) -> "Polynomial":
        m = tuple(m)
        return Polynomial._raw(
            self.nvars, {tuple(a + b for a, b in zip(k, m)): c for k, c in self._terms.items()},
            self.field)

    def substitute(self, images: list["Polynomial"], nvars: int | None = None) -> "Polynomial":
        """Replace ``x_i`` by ``images[i-1]``; all images share one ring."""
        if len(images) != self.nvars:
            raise DimensionError("need one image per variable")
        target = nvars if nvars is not None else (images[0].nvars if images else 0)
        result = Polynomial._raw(target, {}, self.field)
        powers = [[Polynomial.constant(1, target, self.field)] for _ in images]
        for m, c in self._terms.items():
            term = Polynomial.constant(c, target, self.field)
            for j, e in enumerate(m):
                if e:
                    pw = powers[j]
                    while len(pw) <= e:
                        pw.append(pw[-1] * images[j])
                    term = term * pw[e]
            result = result + term
        return result

    def monic(self) -> "Polynomial":
        """Scale so the lex-leading coefficient is 1."""
        if not self._terms:
            return self
        return self.scale(1 / self._terms[tuple(self.leading_monomial())])

    # -- comparison / display ------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.nvars == other.nvars and self.field == other.field
                    and self._terms == other._terms)
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_polynomial(self)

    def __reduce__(self):
        return (Polynomial, (self.nvars, self._terms, self.field))


def format_polynomial(f: Polynomial) -> str:
    """Canonical text: terms in descending lex, ``-2/3*x1^2*x3`` style."""
    if f.is_zero():
        return "0"
    out = []
    for m in sorted(f._terms, key=Monomial, reverse=True):
        c = f._terms[m]
        neg = _is_negative(c)
        a = -c if neg else c
        mono = format_monomial(m)
        if mono == "1":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


def _is_negative(c) -> bool:
    if hasattr(c, "p"):
        return str(c).startswith("-")
    return c < 0


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def poly_scale(f: Polynomial, c) -> Polynomial:
    return f.scale(c)


def product(factors: Iterable[Polynomial], nvars: int, field: Field = QQ) -> Polynomial:
    out = Polynomial.constant(1, nvars, field)
    for q in factors:
        out = out * q
    return out
