from __future__ import annotations

import random
from pathlib import Path

import pytest

from splitegh.egh import EghInput
from splitegh.field import QQ
from splitegh.poly import Polynomial
from splitegh.problem import load_problem
from splitegh.regseq import QuadraticSplitSequence, SplitSequence

import oracles

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def variables(n, field=QQ):
    return [Polynomial.var(i, n, field) for i in range(1, n + 1)]


def alternating_form(i, n):
    """``-x_1 - ... - x_{i-1} + x_i + ... + x_n``."""
    return Polynomial.linear([-1] * (i - 1) + [1] * (n - i + 1))


def five_variables() -> EghInput:
    x = variables(5)
    seq = SplitSequence(5, tuple((x[i - 1], alternating_form(i, 5)) for i in range(1, 6)))
    return EghInput.from_generators([x[0] * x[1] + x[0] * x[2], x[0] ** 2 + x[3] * x[4]], seq)


def six_variables() -> EghInput:
    x = variables(6)
    facs = [(x[i - 1], alternating_form(i, 6)) for i in range(1, 6)]
    facs.append((x[5], x[5], alternating_form(6, 6)))
    seq = SplitSequence(6, tuple(facs))
    extra = [x[0] * x[1] + x[2] * x[3], x[0] * x[5] + x[4] ** 2, x[1] ** 2 * x[2]]
    return EghInput.from_generators(extra, seq)


def three_variable_sequence() -> QuadraticSplitSequence:
    return QuadraticSplitSequence([[1, 1, 1], [-1, 1, 1], [-1, -1, 1]])


def random_quadratic(rng: random.Random, n: int) -> QuadraticSplitSequence:
    seq = QuadraticSplitSequence(oracles.random_regular_matrix(rng, n))
    assert seq.verified
    return seq


def random_form(rng: random.Random, n: int, d: int, terms: int = 3) -> Polynomial:
    mons = oracles.monomials(n, d)
    while True:
        f = Polynomial(n, {rng.choice(mons): rng.choice([-2, -1, 1, 2, 3]) for _ in range(terms)})
        if not f.is_zero():
            return f


@pytest.fixture
def ex5():
    return five_variables()


@pytest.fixture
def ex6():
    return six_variables()


@pytest.fixture
def problems_dir():
    return PROBLEMS


@pytest.fixture
def load():
    return lambda name: load_problem(PROBLEMS / name)


# one "PASS|FAIL criterion ..." line per acceptance criterion, echoed at the end of the run
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
