import random

import pytest
from hypothesis import given, settings, strategies as st

from splitegh.errors import ArgumentError, ProblemSyntaxError
from splitegh.field import GF, QQ
from splitegh.poly import Polynomial
from splitegh.problem import (ProblemFile, format_factored, load_problem, parse_factored,
                              parse_polynomial, parse_problem)

from conftest import random_form, random_quadratic, variables


def test_polynomial_examples():
    x1, x2, x3 = variables(3)
    assert parse_polynomial("x1^2 + x1*x2 + x1*x3", 3) == x1 ** 2 + x1 * x2 + x1 * x3
    assert parse_polynomial(" - 3/6 * x2 ^ 2+x1", 3) == x1 - QQ(1) / 2 * x2 ** 2
    assert parse_polynomial("x1*x1 - x1^2 + x3", 3) == x3
    assert parse_polynomial("2*x1*x2^3", 3) == 2 * x1 * x2 ** 3


def test_factored_examples():
    x1, x2, x3 = variables(3)
    facs = parse_factored("(x1)*(x1+x2+x3)", 3)
    assert facs == (x1, x1 + x2 + x3)
    assert format_factored(facs) == "(x1)*(x1 + x2 + x3)"


@pytest.mark.parametrize("text,col,reason", [
    ("x1^2 +", 7, "expected a variable at end of input"),
    ("x1 + + x2", 6, "expected a variable"),
    ("x1 x2", 4, "unexpected 'x2'"),
    ("x4", 1, "out of range"),
    ("x1 ? x2", 4, "unexpected character"),
    ("1/0*x1", 3, "zero denominator"),
    ("3 x1", 3, "expected '*'"),
])
def test_polynomial_errors_carry_columns(text, col, reason):
    with pytest.raises(ProblemSyntaxError) as info:
        parse_polynomial(text, 3)
    assert info.value.column == col
    assert reason in info.value.reason


def test_non_linear_factor_is_rejected():
    with pytest.raises(ProblemSyntaxError, match="not a linear form") as info:
        parse_factored("(x1)*(x2^2)", 3)
    assert info.value.column == 6
    with pytest.raises(ProblemSyntaxError):
        parse_factored("(x1)*x2", 3)


def test_problem_files_load(problems_dir, ex5, ex6):
    p5 = load_problem(problems_dir / "five_variables.prob")
    assert p5.nvars == 5 and p5.powers == (2, 2, 2, 2, 2)
    assert p5.split_sequence().forms == ex5.sequence.forms
    assert p5.ideal_presentation().hilbert(5) == ex5.ideal.hilbert(5)
    p6 = load_problem(problems_dir / "six_variables.prob")
    assert p6.split_sequence().degrees == (2, 2, 2, 2, 2, 3)
    assert p6.ideal_presentation().hilbert(6) == ex6.ideal.hilbert(6)
    sq = load_problem(problems_dir / "pure_squares3.prob")
    assert sq.sequence == () and sq.split_sequence().degrees == (2, 2, 2)


def test_header_and_section_errors():
    cases = [
        ("field: rationals\nideal:\n  x1\n", 1, "missing 'vars:'"),
        ("vars: 0\n", 1, "positive integer"),
        ("vars: 2\nfield: reals\n", 2, None),
        ("vars: 2\nideal:\n  x1 +\n", 3, None),
        ("vars: 2\n  x1\n", 2, "outside a section"),
        ("vars: 2\nideal: x1\n", 2, "following lines"),
        ("vars: 2\nideal:\n  x1\nvars: 3\n", 4, "after a section"),
        ("vars: 2\npowers: 2,a\n", 2, "integers"),
    ]
    for text, line, reason in cases:
        with pytest.raises(ProblemSyntaxError) as info:
            parse_problem(text)
        assert info.value.line == line, text
        if reason:
            assert reason in info.value.reason


def test_error_column_inside_a_section_line():
    with pytest.raises(ProblemSyntaxError) as info:
        parse_problem("vars: 3\nideal:\n    x1^2 +\n")
    assert (info.value.line, info.value.column) == (3, 11)


def test_inconsistent_shapes():
    with pytest.raises(ArgumentError, match="sequence has 1 forms"):
        parse_problem("vars: 2\nsequence:\n  (x1)*(x1)\n")
    with pytest.raises(ArgumentError, match="disagree"):
        parse_problem("vars: 2\npowers: 2,3\nsequence:\n  (x1)*(x1)\n  (x2)*(x2)\n")
    with pytest.raises(ArgumentError, match="neither"):
        parse_problem("vars: 2\n").ideal_presentation()


def test_comments_and_prime_field():
    p = parse_problem("# hi\nvars: 2   # two\nfield: prime 7\nideal:\n  8*x1 # eight\n")
    assert p.field == GF(7)
    assert p.ideal[0] == Polynomial.var(1, 2, GF(7))


def test_serialize_examples(problems_dir):
    for name in ("five_variables.prob", "six_variables.prob", "pure_squares3.prob", "squarefree3.prob"):
        p = load_problem(problems_dir / name)
        text = p.serialize()
        assert parse_problem(text) == p
        assert parse_problem(text).serialize() == text


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_round_trip_random(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    seq = random_quadratic(rng, n).as_split()
    ideal = tuple(random_form(rng, n, rng.randint(1, 3)) for _ in range(rng.randint(0, 3)))
    ideal = tuple(g * (QQ(rng.randint(1, 5)) / rng.randint(1, 7)) for g in ideal)
    p = ProblemFile(n, QQ, tuple(seq.degrees), ideal, seq.factors)
    q = parse_problem(p.serialize())
    assert q == p
    assert q.serialize() == p.serialize()
