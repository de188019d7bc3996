"""Command-line front end.

Exit codes: 0 success, 1 mathematically infeasible (not regular, not
realizable, bound violated), 2 parse or argument error, 3 internal
invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .egh import EghInput, egh_construct
from .errors import ArgumentError, InternalInvariantError, NotRealizableError
from .graded import HilbertFunction
from .lpp import kk_bound_check, lpp_realize
from .macaulay import macaulay_upper
from .poly import format_polynomial
from .problem import load_problem, parse_polynomial
from .regseq import QuadraticSplitSequence, is_regular_general, squarefree_reduce

SCHEMA = 1

EXIT_OK, EXIT_INFEASIBLE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class _Infeasible(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ArgumentError(message)


def _int_list(text: str) -> tuple:
    try:
        vals = tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise ArgumentError(f"expected comma-separated integers, got {text!r}") from None
    if not vals:
        raise ArgumentError("empty integer list")
    return vals


def _display(h) -> str:
    """Trailing zeros collapsed to one."""
    vals = list(h)
    while len(vals) > 1 and vals[-1] == 0 and vals[-2] == 0:
        vals.pop()
    return ",".join(map(str, vals))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _truncation(problem, maxdeg):
    if maxdeg is not None:
        if maxdeg < 0:
            raise ArgumentError("--maxdeg must be >= 0")
        return maxdeg
    seq = problem.split_sequence()
    if seq is None:
        raise ArgumentError("--maxdeg is required when the problem has no sequence or powers")
    return seq.truncation()


def cmd_hilbert(args, out):
    problem = load_problem(args.file)
    D = _truncation(problem, args.maxdeg)
    H = problem.ideal_presentation().hilbert(D)
    if args.json:
        out.write(_dump({"schema": SCHEMA, "hilbert": list(H)}) + "\n")
    else:
        out.write((str(H) if args.maxdeg is not None else _display(H)) + "\n")


def cmd_check_regseq(args, out):
    problem = load_problem(args.file)
    seq = problem.split_sequence()
    if seq is None:
        raise ArgumentError("the problem has no sequence section")
    try:
        quad = QuadraticSplitSequence.from_split(seq, verify=True)
    except ArgumentError:
        quad = None
    if quad is not None:
        if quad.verified:
            out.write("regular: every principal minor is nonzero\n")
            return
        subset = ",".join(map(str, quad.failing_subset))
        raise _Infeasible(f"not regular: principal minor on {{{subset}}} vanishes")
    if is_regular_general(seq):
        out.write(f"regular: quotient vanishes in degree {seq.truncation()}\n")
        return
    raise _Infeasible(f"not regular: quotient does not vanish in degree {seq.truncation()}")


def cmd_reduce(args, out):
    problem = load_problem(args.file)
    seq = problem.split_sequence()
    if seq is None:
        raise ArgumentError("the problem has no sequence section")
    quad = QuadraticSplitSequence.from_split(seq, verify=True)
    if not quad.verified:
        subset = ",".join(map(str, quad.failing_subset))
        raise _Infeasible(f"not regular: principal minor on {{{subset}}} vanishes")
    g = parse_polynomial(args.poly, problem.nvars, problem.field)
    out.write(format_polynomial(squarefree_reduce(g, quad)) + "\n")


def cmd_lpp(args, out):
    H = HilbertFunction(_int_list(args.hilbert))
    powers = _int_list(args.powers)
    try:
        L = lpp_realize(H, powers)
    except NotRealizableError as exc:
        raise _Infeasible(f"not realizable: {exc}") from None
    if args.json:
        out.write(_dump({"schema": SCHEMA, "hilbert": list(H),
                         "generators": L.generator_strings()}) + "\n")
    else:
        out.write("\n".join(L.generator_strings()) + "\n")


def cmd_kk(args, out):
    H = _int_list(args.hilbert)
    ok, d = kk_bound_check(H)
    if not ok:
        raise _Infeasible(f"bound violated at d={d}: {H[d + 1]} > {macaulay_upper(H[d], d)}")
    out.write("bound holds\n")


def cmd_egh(args, out):
    problem = load_problem(args.file)
    seq = problem.split_sequence()
    if seq is None:
        raise ArgumentError("egh needs a sequence section or a powers header")
    D = _truncation(problem, args.maxdeg)
    inp = EghInput(problem.ideal_presentation(), seq)
    res = egh_construct(inp, D, recursive=not args.direct_slices,
                        diagnostics=args.report is not None)
    report = res.report.to_dict()
    if args.report is not None:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(_dump(report) + "\n")
    if args.json:
        out.write(_dump({"schema": SCHEMA, "hilbert": list(res.hilbert),
                         "generators": res.generator_strings(),
                         "verified": res.report.ok, "report": report}) + "\n")
    else:
        out.write("\n".join(res.generator_strings()) + "\n")
        status = "matches input" if res.report.ok else "DOES NOT match input"
        out.write(f"H = {_display(res.output.hilbert())} ({status})\n")
    if not res.report.ok:
        raise InternalInvariantError("independent verification failed: "
                                     + "; ".join(res.report.notes))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="splitegh",
                description="Hilbert functions, lex-plus-powers ideals and the split EGH construction.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    h = sub.add_parser("hilbert", help="Hilbert function of the problem's ideal")
    h.add_argument("file")
    h.add_argument("--maxdeg", type=int)
    h.add_argument("--json", action="store_true")
    h.set_defaults(func=cmd_hilbert)

    c = sub.add_parser("check-regseq", help="decide regularity of the sequence section")
    c.add_argument("file")
    c.set_defaults(func=cmd_check_regseq)

    r = sub.add_parser("reduce", help="square-free normal form modulo a quadratic sequence")
    r.add_argument("file")
    r.add_argument("--poly", required=True)
    r.set_defaults(func=cmd_reduce)

    lp = sub.add_parser("lpp", help="lex-plus-powers ideal with a given Hilbert function")
    lp.add_argument("--hilbert", required=True)
    lp.add_argument("--powers", required=True)
    lp.add_argument("--json", action="store_true")
    lp.set_defaults(func=cmd_lpp)

    k = sub.add_parser("kk", help="growth bound for ideals containing the squares")
    k.add_argument("--hilbert", required=True)
    k.set_defaults(func=cmd_kk)

    e = sub.add_parser("egh", help="monomial ideal with pure powers and the same Hilbert function")
    e.add_argument("file")
    e.add_argument("--maxdeg", type=int)
    e.add_argument("--json", action="store_true")
    e.add_argument("--report", metavar="PATH")
    e.add_argument("--direct-slices", action="store_true",
                   help="compress slices directly instead of recursing")
    e.set_defaults(func=cmd_egh)
    return p


def run_command(argv: Sequence[str], out=None, err=None) -> int:
    """Run one command; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        args.func(args, out)
    except _Infeasible as exc:
        out.write(f"{exc}\n")
        return EXIT_INFEASIBLE
    except NotRealizableError as exc:
        out.write(f"{exc}\n")
        return EXIT_INFEASIBLE
    except InternalInvariantError as exc:
        err.write(f"internal error: {exc}\n")
        for line in exc.trace:
            err.write(f"  {line}\n")
        return EXIT_INTERNAL
    except (ArgumentError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
