"""Monomial ideals with the Hilbert function of an ideal containing a split
regular sequence.

Given ``I`` containing ``f_1, ..., f_n`` of degrees ``a_1 <= ... <= a_n``
where every ``f_i`` is a product of linear forms, :func:`egh_construct`
produces a lex-plus-powers ideal containing ``x_1^{a_1}, ..., x_n^{a_n}``
with ``H(S/output) = H(S/I)``.

The work is done one degree at a time.  For degree ``d`` the ideal
``J = <f_1, ..., f_n> + <I_d>`` is cut along the factors ``q_1 ... q_s`` of
``f_n`` into slices ``J_i = (J : q_1 ... q_i) + <q_{i+1}>``; each slice lives
in ``S/<q_{i+1}>``, a ring in one variable fewer, where the construction
recurses.  The recursive answers ``L_i`` are stacked as
``K = sum_i x_n^i L_i + <x_n^s>``, which agrees with ``J`` through degree
``d + 1``.  The degree-``d`` pieces of the lex-plus-powers compressions of
the ``K``'s are then glued into one ideal.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import ArgumentError, InternalInvariantError, NotRealizableError
from .graded import (HilbertFunction, IdealPresentation, add_principal, colon_component,
                     colon_ideal, complete_intersection_hilbert, hilbert_function_direct,
                     ideal_component,
                     intersect_dim, linear_quotient_map, principal_component,
                     quotient_by_linear, socle_bound)
from .lpp import LppIdeal, MonomialIdeal, kk_bound_check, lpp_realize
from .monomial import monomial_basis, outside_powers
from .poly import Polynomial
from .regseq import SplitSequence, is_regular_general

log = logging.getLogger(__name__)


@dataclass
class EghInput:
    """An ideal together with a split regular sequence inside it."""

    ideal: IdealPresentation
    sequence: SplitSequence
    check: bool = True

    containment: str = dc_field(default="", init=False)

    def __post_init__(self):
        if self.ideal.nvars != self.sequence.nvars:
            raise ArgumentError("ideal and sequence live in different rings")
        if self.ideal.field != self.sequence.field:
            raise ArgumentError("ideal and sequence use different fields")
        gens = set(self.ideal.generators)
        if all(f in gens for f in self.sequence.forms):
            self.containment = "generators include the sequence"
        elif self.check:
            for i, f in enumerate(self.sequence.forms, 1):
                if not self.ideal.contains(f):
                    raise ArgumentError(f"f_{i} = {f} is not in the ideal")
            self.containment = "verified by membership"
        else:
            self.containment = "assumed"
        if self.check and not is_regular_general(self.sequence):
            raise NotRealizableError("the sequence is not regular")

    @classmethod
    def from_generators(cls, extra: Sequence[Polynomial], sequence: SplitSequence,
                        check: bool = True) -> "EghInput":
        """``I = <f_1, ..., f_n> + <extra>``."""
        ideal = IdealPresentation(sequence.nvars, tuple(sequence.forms) + tuple(extra),
                                  sequence.field)
        return cls(ideal, sequence, check)

    @property
    def nvars(self) -> int:
        return self.sequence.nvars

    @property
    def powers(self) -> tuple:
        return self.sequence.degrees

    @property
    def truncation(self) -> int:
        return socle_bound(self.powers) + 1


@dataclass
class SliceRecord:
    index: int
    factor: str
    hilbert: HilbertFunction
    nvars: int
    sequence: str
    lpp: LppIdeal

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "factor": self.factor,
            "hilbert": list(self.hilbert),
            "nvars": self.nvars,
            "sequence": self.sequence,
            "lpp_generators": self.lpp.generator_strings(),
        }


@dataclass
class DegreeStep:
    """Outcome of the construction at one degree ``d``."""

    degree: int
    top: int
    K: MonomialIdeal
    k_hilbert: HilbertFunction
    j_hilbert: HilbertFunction
    order: tuple = ()
    slices: list = dc_field(default_factory=list)
    shortcut: str | None = None

    def to_dict(self) -> dict:
        out = {
            "degree": self.degree,
            "top": self.top,
            "order": list(self.order),
            "k_generators": self.K.generator_strings(),
            "k_hilbert": list(self.k_hilbert),
            "j_hilbert": list(self.j_hilbert),
            "slices": [s.to_dict() for s in self.slices],
        }
        if self.shortcut:
            out["shortcut"] = self.shortcut
        return out


@dataclass
class VerificationReport:
    """Independent re-derivation of the input/output Hilbert functions."""

    truncation: int
    input_hilbert: tuple
    output_hilbert: tuple
    table: list
    pure_powers_ok: bool
    closure_ok: bool
    hilbert_ok: bool
    first_mismatch: int | None
    degree_checks: list = dc_field(default_factory=list)
    slice_independence: list = dc_field(default_factory=list)
    slices: list = dc_field(default_factory=list)
    steps: list = dc_field(default_factory=list)
    stats: dict = dc_field(default_factory=dict)
    notes: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.pure_powers_ok and self.closure_ok and self.hilbert_ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "truncation": self.truncation,
            "input_hilbert": list(self.input_hilbert),
            "output_hilbert": list(self.output_hilbert),
            "hilbert_ok": self.hilbert_ok,
            "first_mismatch": self.first_mismatch,
            "pure_powers_ok": self.pure_powers_ok,
            "closure_ok": self.closure_ok,
            "table": [dict(row) for row in self.table],
            "degree_checks": [dict(row) for row in self.degree_checks],
            "slice_independence": list(self.slice_independence),
            "slices": [list(h) for h in self.slices],
            "steps": [s.to_dict() for s in self.steps],
            "stats": dict(self.stats),
            "notes": list(self.notes),
        }


@dataclass
class EghResult:
    output: LppIdeal
    hilbert: HilbertFunction
    report: VerificationReport | None = None
    steps: list = dc_field(default_factory=list)

    def generator_strings(self) -> list[str]:
        return self.output.generator_strings()


class _Context:
    """Memo and counters shared by one top-level construction."""

    def __init__(self, recursive: bool):
        self.recursive = recursive
        self.memo: dict = {}
        self.calls: dict = {}
        self.steps = 0

    def count(self, n):
        self.calls[n] = self.calls.get(n, 0) + 1


# -- factor ordering ---------------------------------------------------------

def factor_order(J: IdealPresentation, qs: Sequence[Polynomial], d: int) -> tuple:
    """Indices of ``qs`` in the greedy order.

    Position ``k`` (for ``k < s - 1``) takes the remaining factor ``q``
    maximizing ``dim((J : chosen)_{d-k} cap <q>_{d-k})``; ties go to the
    lowest original index.  The last factor is whatever remains.
    """
    s = len(qs)
    if s == 0:
        raise ArgumentError("need at least one factor")
    remaining = list(range(s))
    chosen: list = []
    for k in range(s - 1):
        t = d - k
        if t < 1:
            chosen.extend(remaining)
            return tuple(chosen)
        colon = colon_component(J, [qs[c] for c in chosen], t)
        best, best_dim = None, -1
        for c in remaining:
            dim = intersect_dim(colon, principal_component(qs[c], t))
            if dim > best_dim:
                best, best_dim = c, dim
        chosen.append(best)
        remaining.remove(best)
    chosen.extend(remaining)
    return tuple(chosen)


def order_factors(J: IdealPresentation, qs: Sequence[Polynomial], d: int) -> list:
    """``qs`` permuted into the greedy order of :func:`factor_order`."""
    return [qs[c] for c in factor_order(J, qs, d)]


def slice_hilbert_functions(ideal: IdealPresentation, qs: Sequence[Polynomial],
                            maxdeg: int) -> list[HilbertFunction]:
    """``H(S/(I : q_1 ... q_i) + <q_{i+1}>)`` for ``i = 0, ..., s - 1``, through
    ``maxdeg - i``.  When ``q_1 ... q_s`` lies in ``I`` they telescope to
    ``H(S/I)``."""
    out = []
    for i in range(len(qs)):
        m = maxdeg - i
        if m < 0:
            break
        out.append(add_principal(colon_ideal(ideal, list(qs[:i]), m), qs[i]).hilbert(m))
    return out


def slice_intersection_dims(ideal: IdealPresentation, qs: Sequence[Polynomial],
                            i: int, d: int) -> list[int]:
    """``dim((I : q_1 ... q_i)_{d-i} cap <q_k>_{d-i})`` for every ``k > i``
    (0-based), the quantities the greedy order compares."""
    t = d - i
    colon = colon_component(ideal, list(qs[:i]), t)
    return [intersect_dim(colon, principal_component(q, t)) for q in qs[i:]]


# -- transport through S/<q> -------------------------------------------------

def transport_sequence(seq: SplitSequence, q: Polynomial) -> SplitSequence:
    """Images of ``f_1, ..., f_{n-1}`` in ``S/<q>``, factor by factor."""
    images, _ = linear_quotient_map(q)
    m = seq.nvars - 1
    facs = []
    for i, fl in enumerate(seq.factors[:-1], 1):
        new = []
        for l in fl:
            img = l.substitute(images, m)
            if img.is_zero():
                raise InternalInvariantError(
                    f"factor {l} of f_{i} vanishes modulo {q}; sequence is not regular")
            new.append(img)
        facs.append(tuple(new))
    return SplitSequence(m, tuple(facs), seq.field)


def _j_ideal(inp: EghInput, d: int) -> IdealPresentation:
    """``<f_1, ..., f_n> + <I_d>`` with only the new degree-``d`` generators."""
    seq = inp.sequence
    P = seq.ideal()
    Pd = ideal_component(P, d)
    Id = ideal_component(inp.ideal, d)
    ech = Pd._echelon()
    basis = monomial_basis(inp.nvars, d)
    extra = []
    for p in sorted(Id._rows):
        r = Id._rows[p]
        if ech.insert(r):
            extra.append(Polynomial._raw(inp.nvars, {basis[c]: x for c, x in r.items()},
                                         seq.field))
    J = IdealPresentation(inp.nvars, tuple(seq.forms) + tuple(extra), seq.field)
    for t in range(d):
        J._cache[t] = ideal_component(P, t)
    J._cache[d] = Id
    return J


def _unit_lpp(powers, D: int) -> LppIdeal:
    n = len(powers)
    return LppIdeal(n, tuple(powers), tuple(tuple(outside_powers(n, t, tuple(powers)))
                                            for t in range(D + 1)))


# -- one degree --------------------------------------------------------------

def theorem21_degree_step(inp: EghInput, d: int, top: int | None = None,
                          recursive: bool = True, order: Sequence[int] | None = None,
                          _ctx: _Context | None = None) -> DegreeStep:
    """Monomial ideal ``K`` containing the pure powers with ``H(S/K, t) =
    H(S/J, t)`` for ``t <= top`` (default ``d + 1``), where ``J`` is the
    sequence plus ``I_d``.  In particular ``H(S/K, d) = H(S/I, d)`` and
    ``H(S/K, d + 1) >= H(S/I, d + 1)``.

    ``order`` overrides the greedy factor order with a permutation of
    ``range(s)``; the invariants are still checked.
    """
    ctx = _ctx or _Context(recursive)
    n = inp.nvars
    if n < 2:
        raise ArgumentError("a degree step needs at least two variables")
    if d < 0:
        raise ArgumentError("degree must be >= 0")
    top = d + 1 if top is None else top
    seq = inp.sequence
    powers = seq.degrees
    ctx.steps += 1

    P = seq.ideal()
    if ideal_component(inp.ideal, d).dim == ideal_component(P, d).dim:
        # J is the complete intersection itself
        K = MonomialIdeal(n, tuple(tuple(a if j == i else 0 for j in range(n))
                                   for i, a in enumerate(powers)))
        H = complete_intersection_hilbert(powers, top)
        return DegreeStep(d, top, K, K.hilbert(top), H, shortcut="complete-intersection")

    J = _j_ideal(inp, d)
    qs = seq.last_factors
    s = len(qs)
    if order is None:
        order = factor_order(J, qs, d)
    else:
        order = tuple(order)
        if sorted(order) != list(range(s)):
            raise ArgumentError(f"order must permute 0..{s - 1}, got {order}")
    qo = [qs[c] for c in order]

    slices = []
    lpps = []
    for i in range(s):
        m_i = top - i
        if m_i < 0:
            lpp = LppIdeal.pure_powers(powers[:-1], 0)
            lpps.append(lpp)
            continue
        Ji = add_principal(colon_ideal(J, qo[:i], m_i), qo[i])
        H_i = Ji.hilbert(m_i)
        sub_seq = transport_sequence(seq, qo[i])
        if H_i[0] == 0:
            # q_1 ... q_i already lies in J
            lpp = _unit_lpp(powers[:-1], m_i)
        elif ctx.recursive:
            sub_ideal = quotient_by_linear(Ji, qo[i])
            sub = _construct(EghInput(sub_ideal, sub_seq, check=False), m_i, ctx)
            lpp = sub.output
            if lpp.hilbert() != H_i:
                raise InternalInvariantError(
                    f"slice {i} at degree {d}: recursion gave {lpp.hilbert()}, expected {H_i}")
        else:
            try:
                lpp = lpp_realize(H_i, powers[:-1])
            except NotRealizableError as exc:
                raise InternalInvariantError(f"slice {i} at degree {d}: {exc}") from exc
        lpps.append(lpp)
        slices.append(SliceRecord(i, str(qo[i]), H_i, n - 1, str(sub_seq), lpp))

    # nesting of consecutive slice compressions
    for i in range(s - 1):
        a, b = lpps[i], lpps[i + 1]
        for j in range(min(d - i, a.truncation, b.truncation) + 1):
            if not set(a.segments[j]) <= set(b.segments[j]):
                raise InternalInvariantError(
                    f"degree {d}: L_{i},{j} is not contained in L_{i + 1},{j}")

    gens = [tuple(0 for _ in range(n - 1)) + (s,)]
    for i, lpp in enumerate(lpps):
        for z in lpp.minimal_generators():
            gens.append(tuple(z) + (i,))
    K = MonomialIdeal(n, tuple(gens))
    k_hilbert = K.hilbert(top)
    j_hilbert = J.hilbert(top)

    for t in range(top + 1):
        tele = sum(sl.hilbert[t - sl.index] for sl in slices if t - sl.index >= 0)
        if tele != j_hilbert[t]:
            raise InternalInvariantError(
                f"degree {d}: slice functions sum to {tele} at t={t}, H(S/J) = {j_hilbert[t]}")
    if k_hilbert != j_hilbert:
        raise InternalInvariantError(
            f"degree {d}: H(S/K) = {k_hilbert} differs from H(S/J) = {j_hilbert}")
    return DegreeStep(d, top, K, k_hilbert, j_hilbert, order, slices)


# -- gluing ------------------------------------------------------------------

def _memo_key(inp: EghInput, D: int):
    comps = tuple(ideal_component(inp.ideal, t)._canonical() for t in range(D + 1))
    facs = tuple(tuple(str(q) for q in fl) for fl in inp.sequence.factors)
    return (inp.nvars, D, facs, comps)


def _construct(inp: EghInput, D: int, ctx: _Context) -> EghResult:
    n = inp.nvars
    powers = inp.powers
    ctx.count(n)
    key = _memo_key(inp, D)
    if key in ctx.memo:
        return ctx.memo[key]
    H = inp.ideal.hilbert(D)
    if n == 1 or H == complete_intersection_hilbert(powers, D):
        # one variable: every ideal with x^a is already lex
        try:
            out = lpp_realize(H, powers)
        except NotRealizableError as exc:
            raise InternalInvariantError(str(exc)) from exc
        res = EghResult(out, H)
        ctx.memo[key] = res
        return res

    steps = []
    lpps = []
    for d in range(D + 1):
        top = d + 1 if d < D else d
        step = theorem21_degree_step(inp, d, top, _ctx=ctx)
        if step.k_hilbert[d] != H[d]:
            raise InternalInvariantError(
                f"degree {d}: H(S/K, d) = {step.k_hilbert[d]} but H(S/I, d) = {H[d]}")
        if d < D and step.k_hilbert[d + 1] < H[d + 1]:
            raise InternalInvariantError(
                f"degree {d}: H(S/K, d+1) = {step.k_hilbert[d + 1]} < H(S/I, d+1) = {H[d + 1]}")
        try:
            lpps.append(lpp_realize(step.k_hilbert, powers))
        except NotRealizableError as exc:
            raise InternalInvariantError(f"degree {d}: {exc}") from exc
        steps.append(step)

    for d in range(D):
        if not set(lpps[d].segments[d + 1]) <= set(lpps[d + 1].segments[d + 1]):
            raise InternalInvariantError(f"gluing: degree {d + 1} pieces do not nest")
    segs = tuple(lpps[d].segments[d] for d in range(D + 1))
    try:
        out = LppIdeal(n, powers, segs)
    except ArgumentError as exc:
        raise InternalInvariantError(f"glued components do not form an ideal: {exc}") from exc
    if out.hilbert() != H:
        raise InternalInvariantError(f"glued ideal has {out.hilbert()}, input has {H}")
    res = EghResult(out, H, steps=steps)
    ctx.memo[key] = res
    return res


def egh_construct(inp: EghInput, maxdeg: int | None = None, recursive: bool = True,
                  verify_result: bool = True, diagnostics: bool = False) -> EghResult:
    """Lex-plus-powers ideal with the Hilbert function of ``inp.ideal``.

    ``maxdeg`` defaults to one past the socle bound, where everything
    vanishes.  With ``recursive=False`` the slice ideals are compressed
    directly instead of being rebuilt in fewer variables.  ``diagnostics``
    adds the slice-independence table for the last form to the report.
    """
    D = inp.truncation if maxdeg is None else maxdeg
    if D < 0:
        raise ArgumentError("maxdeg must be >= 0")
    ctx = _Context(recursive)
    res = _construct(inp, D, ctx)
    if verify_result:
        res.report = verify(inp, res, D)
        res.report.steps = list(res.steps)
        res.report.stats = {"calls_by_nvars": {str(k): v for k, v in sorted(ctx.calls.items())},
                            "degree_steps": ctx.steps, "recursive": recursive}
        res.report.degree_checks = [
            {"degree": st.degree,
             "input_d": res.hilbert[st.degree], "k_d": st.k_hilbert[st.degree],
             "input_d1": res.hilbert[st.degree + 1] if st.degree < D else None,
             "k_d1": st.k_hilbert[st.degree + 1] if st.degree < st.top else None}
            for st in res.steps]
        if diagnostics and inp.nvars >= 2:
            s = len(inp.sequence.last_factors)
            res.report.slice_independence = [lemma20_check(inp.sequence, j, D) for j in range(s)]
        if not res.steps:
            res.report.notes.append("input agrees with the complete intersection"
                                    if inp.nvars > 1 else "one variable: input is already lex")
    return res


# -- diagnostics -------------------------------------------------------------

def lemma20_check(seq: SplitSequence, j: int, D: int | None = None) -> bool:
    """``H(S/(P : q_1...q_j) + <q_m>)`` is the same for every ``m > j``."""
    qs = seq.last_factors
    s = len(qs)
    if not 0 <= j <= s - 1:
        raise ArgumentError(f"need 0 <= j <= {s - 1}")
    D = seq.truncation() if D is None else D
    P = seq.ideal()
    colon = colon_ideal(P, list(qs[:j]), D)
    seen = None
    for m in range(j, s):
        h = add_principal(colon, qs[m]).hilbert(D)
        if seen is None:
            seen = h
        elif h != seen:
            return False
    return True


def verify(inp: EghInput, result: EghResult, D: int | None = None) -> VerificationReport:
    """Re-derive both Hilbert functions without reusing cached components.

    The input side is recomputed from its generators by direct elimination;
    the output side by counting monomials divisible by its generators.
    ``result.output`` may be an :class:`LppIdeal` or a :class:`MonomialIdeal`.
    """
    D = inp.truncation if D is None else D
    n = inp.nvars
    fresh = IdealPresentation(n, inp.ideal.generators, inp.ideal.field)
    h_in = hilbert_function_direct(fresh, D)
    out = result.output
    mono = out.to_monomial_ideal() if isinstance(out, LppIdeal) else out
    comps = [set(mono.component(t)) for t in range(D + 1)]
    h_out = tuple(len(monomial_basis(n, t)) - len(comps[t]) for t in range(D + 1))

    notes = []
    pure_ok = all(mono.contains(tuple(a if j == i else 0 for j in range(n)))
                  for i, a in enumerate(inp.powers))
    closure_ok = True
    for t in range(D):
        for m in comps[t]:
            for i in range(n):
                e = list(m)
                e[i] += 1
                if tuple(e) not in comps[t + 1]:
                    closure_ok = False
    if isinstance(out, LppIdeal):
        for t in range(min(D, out.truncation) + 1):
            if set(out.component(t)) != comps[t]:
                closure_ok = False
                notes.append(f"stored degree-{t} component differs from the generated one")
    first = next((t for t in range(D + 1) if h_in[t] != h_out[t]), None)
    table = [{"degree": t, "ambient": len(monomial_basis(n, t)),
              "input_dim": len(monomial_basis(n, t)) - h_in[t],
              "output_dim": len(comps[t])} for t in range(D + 1)]
    slices = []
    if n >= 2:
        slices = slice_hilbert_functions(fresh, inp.sequence.last_factors, D)
    ok, bad = kk_bound_check(h_out)
    if set(inp.powers) == {2}:
        notes.append("growth bound holds" if ok else f"growth bound fails at d={bad}")
    if first is not None:
        notes.append(f"Hilbert functions first differ in degree {first}")
    return VerificationReport(D, tuple(h_in), h_out, table, pure_ok, closure_ok,
                              first is None, first, slices=slices, notes=notes)
