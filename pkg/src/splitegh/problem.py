"""Text format for ideals and factored sequences.

A problem file has a header and up to two sections::

    # comments run to the end of the line
    vars: 5
    field: rationals          # or: prime 101
    powers: 2,2,2,2,2         # optional
    ideal:
      x1*x2 + x1*x3
    sequence:
      (x1)*(x1 + x2 + x3 + x4 + x5)

Polynomials follow ``term (('+'|'-') term)*`` with an optional leading
sign, where a term is ``[coeff '*'] var ('^' int)? ('*' var ('^' int)?)*``
and a coefficient is ``int`` or ``int/int``.  Whitespace is ignored.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ArgumentError, ProblemSyntaxError
from .field import QQ, Field, field_from_spec
from .graded import IdealPresentation
from .poly import Polynomial, format_polynomial
from .regseq import SplitSequence

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x(?P<idx>\d+))|(?P<op>[-+*/^()]))")


class _Parser:
    """Recursive-descent parser over one line; columns are 1-based."""

    def __init__(self, text: str, nvars: int, field: Field, line: int = 1, offset: int = 0):
        self.text = text
        self.n = nvars
        self.field = field
        self.line = line
        self.offset = offset
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                col = pos + len(text[pos:]) - len(text[pos:].lstrip())
                self.fail(f"unexpected character {text[col]!r}", col)
            kind = "op" if m.group("op") else ("var" if m.group("var") else "num")
            start = m.start(kind)
            self.tokens.append((kind, m.group(kind), start, m.group("idx")))
            pos = m.end()
        self.i = 0

    def fail(self, reason: str, col: int | None = None):
        if col is None:
            col = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text.rstrip())
        raise ProblemSyntaxError(reason, self.line, self.offset + col + 1)

    def peek(self, value=None):
        if self.i >= len(self.tokens):
            return None
        tok = self.tokens[self.i]
        if value is not None and tok[1] != value:
            return None
        return tok

    def expect(self, value: str):
        if not self.peek(value):
            got = self.peek()
            self.fail(f"expected {value!r}" + (f", got {got[1]!r}" if got else " at end of input"))
        self.i += 1

    def at_end(self) -> bool:
        return self.i >= len(self.tokens)

    def int_token(self) -> int:
        tok = self.peek()
        if tok is None or tok[0] != "num":
            self.fail("expected an integer" + ("" if tok else " at end of input"))
        self.i += 1
        return int(tok[1])

    def factor(self, exps: list):
        tok = self.peek()
        if tok is None or tok[0] != "var":
            self.fail("expected a variable" + ("" if tok else " at end of input"))
        idx = int(tok[3])
        if not 1 <= idx <= self.n:
            self.fail(f"variable x{idx} out of range 1..{self.n}", tok[2])
        self.i += 1
        e = 1
        if self.peek("^"):
            self.i += 1
            e = self.int_token()
        exps[idx - 1] += e

    def term(self):
        exps = [0] * self.n
        coeff = Fraction(1)
        tok = self.peek()
        if tok is not None and tok[0] == "num":
            num = self.int_token()
            den = 1
            if self.peek("/"):
                self.i += 1
                col = self.peek()[2] if self.peek() else None
                den = self.int_token()
                if den == 0:
                    self.fail("zero denominator", col)
            coeff = Fraction(num, den)
            self.expect("*")
        self.factor(exps)
        while self.peek("*"):
            self.i += 1
            self.factor(exps)
        return tuple(exps), coeff

    def polynomial(self) -> Polynomial:
        terms: dict = {}
        sign = 1
        if self.peek("+") or self.peek("-"):
            sign = -1 if self.peek()[1] == "-" else 1
            self.i += 1
        while True:
            m, c = self.term()
            terms[m] = terms.get(m, 0) + sign * c
            if self.peek("+") or self.peek("-"):
                sign = -1 if self.peek()[1] == "-" else 1
                self.i += 1
                continue
            break
        try:
            return Polynomial(self.n, {m: self.field(c) for m, c in terms.items()}, self.field)
        except ArgumentError as exc:
            self.fail(str(exc), 0)

    def factored(self) -> tuple:
        facs = []
        while True:
            start = self.peek()
            self.expect("(")
            q = self.polynomial()
            self.expect(")")
            if not q.is_linear_form():
                self.fail(f"factor {q} is not a linear form", start[2])
            facs.append(q)
            if self.peek("*"):
                self.i += 1
                continue
            break
        return tuple(facs)

    def finish(self):
        if not self.at_end():
            self.fail(f"unexpected {self.peek()[1]!r}")


def parse_polynomial(text: str, nvars: int, field: Field = QQ, line: int = 1,
                     offset: int = 0) -> Polynomial:
    p = _Parser(text, nvars, field, line, offset)
    if p.at_end():
        p.fail("empty polynomial", 0)
    f = p.polynomial()
    p.finish()
    return f


def parse_factored(text: str, nvars: int, field: Field = QQ, line: int = 1,
                   offset: int = 0) -> tuple:
    p = _Parser(text, nvars, field, line, offset)
    if p.at_end():
        p.fail("empty product", 0)
    facs = p.factored()
    p.finish()
    return facs


def format_factored(factors) -> str:
    return "*".join(f"({format_polynomial(q)})" for q in factors)


@dataclass(frozen=True)
class ProblemFile:
    nvars: int
    field: Field
    powers: tuple | None
    ideal: tuple
    sequence: tuple

    def __post_init__(self):
        if self.nvars < 1:
            raise ArgumentError("vars must be a positive integer")
        if self.sequence:
            degs = tuple(len(fl) for fl in self.sequence)
            if len(self.sequence) != self.nvars:
                raise ArgumentError(f"sequence has {len(self.sequence)} forms, vars is {self.nvars}")
            if self.powers is not None and tuple(self.powers) != degs:
                raise ArgumentError(f"powers {self.powers} disagree with sequence degrees {degs}")
        if self.powers is not None:
            if len(self.powers) != self.nvars or any(a < 1 for a in self.powers):
                raise ArgumentError(f"powers must be {self.nvars} positive integers")

    def split_sequence(self) -> SplitSequence | None:
        if self.sequence:
            return SplitSequence(self.nvars, self.sequence, self.field)
        if self.powers is not None:
            return SplitSequence.pure_powers(self.powers, self.field)
        return None

    def ideal_presentation(self) -> IdealPresentation:
        """Generators of the ideal section followed by the sequence forms."""
        seq = self.split_sequence()
        gens = list(self.ideal)
        if seq is not None:
            gens.extend(seq.forms)
        if not gens:
            raise ArgumentError("the problem has neither ideal generators nor a sequence")
        return IdealPresentation(self.nvars, tuple(gens), self.field)

    def serialize(self) -> str:
        lines = [f"vars: {self.nvars}", f"field: {self.field.spec()}"]
        if self.powers is not None:
            lines.append("powers: " + ",".join(map(str, self.powers)))
        if self.ideal:
            lines.append("ideal:")
            lines.extend("  " + format_polynomial(g) for g in self.ideal)
        if self.sequence:
            lines.append("sequence:")
            lines.extend("  " + format_factored(fl) for fl in self.sequence)
        return "\n".join(lines) + "\n"


def _int_list(text: str, line: int, col: int) -> tuple:
    try:
        vals = tuple(int(v) for v in text.replace(" ", "").split(",") if v != "")
    except ValueError:
        raise ProblemSyntaxError(f"expected comma-separated integers, got {text!r}", line, col)
    if not vals:
        raise ProblemSyntaxError("empty integer list", line, col)
    return vals


def parse_problem(text: str) -> ProblemFile:
    """Parse a problem file; errors carry the 1-based line and column."""
    nvars = None
    fld: Field = QQ
    powers = None
    section = None
    pending: list = []  # (section, line number, column offset, body)
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        stripped = body.strip()
        col = body.index(stripped[0])
        head = re.match(r"(vars|field|powers|ideal|sequence)\s*:", stripped)
        if head:
            key = head.group(1)
            rest = stripped[head.end():]
            rcol = col + head.end() + (len(rest) - len(rest.lstrip())) + 1
            rest = rest.strip()
            if key in ("ideal", "sequence"):
                if rest:
                    raise ProblemSyntaxError(f"'{key}:' takes entries on the following lines",
                                             lineno, rcol)
                section = key
                continue
            if section is not None:
                raise ProblemSyntaxError(f"header '{key}:' after a section", lineno, col + 1)
            if key == "vars":
                if not rest.isdigit() or int(rest) < 1:
                    raise ProblemSyntaxError(f"vars must be a positive integer, got {rest!r}",
                                             lineno, rcol)
                nvars = int(rest)
            elif key == "field":
                try:
                    fld = field_from_spec(rest)
                except ArgumentError as exc:
                    raise ProblemSyntaxError(str(exc), lineno, rcol) from None
            else:
                powers = _int_list(rest, lineno, rcol)
            continue
        if section is None:
            raise ProblemSyntaxError(f"unknown header or entry outside a section: {stripped!r}",
                                     lineno, col + 1)
        pending.append((section, lineno, body))
    if nvars is None:
        raise ProblemSyntaxError("missing 'vars:' header", 1, 1)
    ideal, seq = [], []
    for section, lineno, body in pending:
        if section == "ideal":
            ideal.append(parse_polynomial(body, nvars, fld, lineno))
        else:
            seq.append(parse_factored(body, nvars, fld, lineno))
    try:
        return ProblemFile(nvars, fld, powers, tuple(ideal), tuple(seq))
    except ArgumentError as exc:
        raise ProblemSyntaxError(str(exc), 1, 1) from None


def load_problem(path) -> ProblemFile:
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read())
