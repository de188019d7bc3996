import random

import pytest
from hypothesis import given, settings, strategies as st

from splitegh.errors import ArgumentError, DimensionError
from splitegh.graded import (GradedBasis, HilbertFunction, IdealPresentation, add_principal,
                             apply_linear_change, colon_component, colon_ideal,
                             complete_intersection_hilbert, hilbert_function,
                             hilbert_function_direct, ideal_component, ideal_component_direct,
                             intersect_dim, multiply_space, principal_component,
                             quotient_by_linear, sum_spaces, truncated_ideal)
from splitegh.linalg import inverse
from splitegh.poly import Polynomial

import oracles
from conftest import random_form, random_quadratic, three_variable_sequence, variables


def ideal(n, gens):
    return IdealPresentation(n, tuple(gens))


def test_component_examples():
    x1, x2 = variables(2)
    I = ideal(2, [x1 ** 2, x2 ** 2])
    assert ideal_component(I, 2).dim == 2
    assert ideal_component(I, 3).dim == 4 and ideal_component(I, 3).is_full()
    assert ideal_component(three_variable_sequence().ideal(), 2).dim == 3


def test_hilbert_examples(ex5, ex6):
    assert tuple(hilbert_function(ex5.ideal, 5)) == (1, 5, 8, 3, 0, 0)
    assert tuple(hilbert_function(ex6.ideal, 5)) == (1, 6, 14, 13, 2, 0)
    x = variables(3)
    assert str(hilbert_function(ideal(3, [v ** 2 for v in x]), 4)) == "1,3,3,1,0"


def test_canonical_form_identifies_subspaces():
    x1, x2, x3 = variables(3)
    a = GradedBasis.span([x1 * x2 + x2 * x3, x1 * x2 - x2 * x3], 3, 2)
    b = GradedBasis.span([x1 * x2, 5 * x2 * x3], 3, 2)
    assert a == b and hash(a) == hash(b)
    assert a.rows == b.rows
    assert a.pivot_monomials()[0] == (1, 1, 0)


def test_sum_and_intersection_examples():
    x1, x2, x3, x4 = variables(4)
    P = ideal(4, [v ** 2 for v in (x1, x2, x3, x4)])
    h = x1 * x2 + x2 * x4 + x3 * x4
    h1 = x1 * x2 + x1 * x3
    U = multiply_space(GradedBasis.span([h], 4, 2))
    P3 = ideal_component(P, 3)
    V = sum_spaces(P3, multiply_space(GradedBasis.span([h1], 4, 2)))
    assert intersect_dim(U, V) == 2
    assert intersect_dim(U, P3) == 0
    assert intersect_dim(U, multiply_space(GradedBasis.span([h1], 4, 2))) == 0
    assert sum_spaces(U, U) == U and intersect_dim(U, U) == U.dim
    with pytest.raises(DimensionError):
        sum_spaces(U, ideal_component(P, 2))


def test_multiply_space_examples():
    x1, x2, x3 = variables(3)
    assert multiply_space(GradedBasis.span([x1 * x2], 3, 2)).dim == 3
    assert multiply_space(GradedBasis.full(3, 2)) == GradedBasis.full(3, 3)
    P2 = ideal_component(three_variable_sequence().ideal(), 2)
    assert multiply_space(P2).dim == 9


def test_colon_examples(ex5, ex6):
    x5 = variables(5)[4]
    J1 = colon_ideal(ex5.ideal, [x5], 3)
    assert tuple(J1.hilbert(3)) == (1, 4, 2, 0)
    x6 = variables(6)[5]
    assert tuple(colon_ideal(ex6.ideal, [x6, x6], 3).hilbert(3)) == (1, 5, 2, 0)
    assert colon_component(ex5.ideal, [], 2) == ideal_component(ex5.ideal, 2)
    with pytest.raises(ArgumentError):
        colon_component(ex5.ideal, [x5 * x5], 1)
    with pytest.raises(ArgumentError):
        colon_component(ex5.ideal, [Polynomial(5, {})], 1)


def test_add_principal_examples(ex5, ex6):
    x5 = variables(5)[4]
    assert tuple(add_principal(ex5.ideal, x5).hilbert(4)) == (1, 4, 4, 1, 0)
    x6 = variables(6)[5]
    assert tuple(add_principal(ex6.ideal, x6).hilbert(4)) == (1, 5, 8, 2, 0)
    x1, x2 = variables(2)
    I = ideal(2, [x1, x2 ** 3])
    assert add_principal(I, 3 * x1).hilbert(4) == I.hilbert(4)


def test_quotient_examples(ex5):
    x = variables(3)
    zero = quotient_by_linear(ideal(3, [x[2]]), x[2])
    assert zero.nvars == 2 and zero.generators == ()
    assert tuple(zero.hilbert(2)) == (1, 2, 3)
    x5 = variables(5)[4]
    q = quotient_by_linear(add_principal(ex5.ideal, x5), x5)
    assert q.nvars == 4 and tuple(q.hilbert(4)) == (1, 4, 4, 1, 0)
    with pytest.raises(ArgumentError):
        quotient_by_linear(ex5.ideal, Polynomial(5, {}))
    with pytest.raises(ArgumentError):
        quotient_by_linear(ideal(3, [x[0] ** 2]), x[2])


def test_linear_change_examples():
    x1, x2 = variables(2)
    f = x1 ** 2 + x2
    assert apply_linear_change(f, [[1, 0], [0, 1]]) == f
    assert apply_linear_change(f, [[0, 1], [1, 0]]) == x2 ** 2 + x1
    with pytest.raises(ArgumentError):
        apply_linear_change(f, [[1, 2], [2, 4]])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_linear_change_round_trip(seed):
    rng = random.Random(seed)
    n = 3
    while True:
        C = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        if oracles.det(C):
            break
    f = random_form(rng, n, rng.randint(1, 3))
    g = apply_linear_change(f, C)
    # x -> C x then x -> C^{-1} x composes to the identity
    assert apply_linear_change(g, inverse(C)) == f


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_hilbert_against_dense_oracle(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    gens = [random_form(rng, n, rng.randint(1, 3)) for _ in range(rng.randint(1, 4))]
    I = ideal(n, gens)
    D = 4
    want = oracles.hilbert([oracles.to_dict(g) for g in gens], n, D)
    assert tuple(hilbert_function(I, D)) == want
    assert tuple(hilbert_function_direct(IdealPresentation(n, tuple(gens)), D)) == want
    for t in range(D + 1):
        assert ideal_component(I, t) == ideal_component_direct(I, t)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_colon_against_oracle(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 3)
    gens = [random_form(rng, n, rng.randint(2, 3)) for _ in range(rng.randint(1, 3))]
    I = ideal(n, gens)
    q = random_form(rng, n, 1, terms=2)
    d = rng.randint(0, 3)
    col = colon_component(I, [q], d)
    # f in (I : q)_d  iff  q f in I_{d+1}
    Id1 = [oracles.to_dict(g) for g in oracles_component(gens, n, d + 1)]
    base = oracles.span_dim(Id1, n, d + 1)
    for f in col.polynomials():
        assert oracles.span_dim(Id1 + [oracles.to_dict(q * f)], n, d + 1) == base
    kernel_dim = sum(
        1 for m in oracles.monomials(n, d)) - (
        oracles.span_dim(Id1 + [oracles.to_dict(q * Polynomial.monomial(m, n))
                                for m in oracles.monomials(n, d)], n, d + 1) - base)
    assert col.dim == kernel_dim


def oracles_component(gens, n, d):
    out = []
    for g in gens:
        e = g.homogeneous_degree()
        for m in oracles.monomials(n, d - e):
            out.append(g * Polynomial.monomial(m, n))
    return out


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_quotient_preserves_hilbert(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    q = random_form(rng, n, 1, terms=2)
    gens = [q] + [random_form(rng, n, rng.randint(2, 3)) for _ in range(rng.randint(0, 2))]
    I = ideal(n, gens)
    Q = quotient_by_linear(I, q)
    want = oracles.hilbert([oracles.to_dict(g) for g in gens], n, 4)
    assert tuple(Q.hilbert(4)) == want


def test_complete_intersection_hilbert_counts():
    for powers in [(2, 2, 2), (2, 3), (1, 2, 3), (2, 2, 2, 3)]:
        D = sum(a - 1 for a in powers) + 1
        assert tuple(complete_intersection_hilbert(powers, D)) == oracles.pure_power_hilbert(powers, D)


def test_hilbert_function_type():
    H = HilbertFunction.parse("1, 5, 8,3,0")
    assert H[-1] == 0 and H[2] == 8 and H.truncation == 4
    assert str(H.truncate(2)) == "1,5,8"
    with pytest.raises(ArgumentError):
        HilbertFunction((1, -1))
    with pytest.raises(ArgumentError):
        HilbertFunction.parse("1,a")


def test_vanishing_persists(ex6):
    H = ex6.ideal.hilbert(8)
    first = H.values.index(0)
    assert all(v == 0 for v in H.values[first:])


def test_presentation_validation():
    x1, x2 = variables(2)
    with pytest.raises(ArgumentError):
        IdealPresentation(2, (x1 + x2 ** 2,))
    with pytest.raises(ArgumentError):
        IdealPresentation(2, (Polynomial(2, {}),))
    with pytest.raises(DimensionError):
        IdealPresentation(3, (x1,))


def test_truncated_ideal_agrees(ex5):
    T = truncated_ideal(ex5.ideal, 4)
    fresh = IdealPresentation(T.nvars, T.generators)
    assert fresh.hilbert(4) == ex5.ideal.hilbert(4)


def test_principal_component_dimension():
    q = variables(3)[0] + variables(3)[1]
    assert principal_component(q, 3).dim == 6
    assert principal_component(q, 0).dim == 0


def test_random_sequences_are_complete_intersections():
    rng = random.Random(3)
    for _ in range(5):
        seq = random_quadratic(rng, 3)
        assert tuple(seq.ideal().hilbert(4)) == (1, 3, 3, 1, 0)
