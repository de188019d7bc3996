import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from splitegh.egh import (EghInput, EghResult, egh_construct, factor_order, lemma20_check,
                          order_factors, slice_hilbert_functions, slice_intersection_dims,
                          theorem21_degree_step, transport_sequence, verify)
from splitegh.errors import ArgumentError, NotRealizableError
from splitegh.graded import (IdealPresentation, colon_component, intersect_dim,
                             principal_component)
from splitegh.lpp import LppIdeal, MonomialIdeal, kk_bound_check
from splitegh.regseq import SplitSequence

import oracles
from conftest import random_form, random_quadratic, variables


def pure_input(powers):
    seq = SplitSequence.pure_powers(powers)
    return EghInput(seq.ideal(), seq)


# -- input validation --------------------------------------------------------

def test_input_checks_membership_and_regularity():
    x1, x2 = variables(2)
    seq = SplitSequence(2, ((x1, x1), (x2, x2)))
    with pytest.raises(ArgumentError):
        EghInput(IdealPresentation(2, (x1 ** 2,)), seq)
    bad = SplitSequence(2, ((x1, x2), (x2, x1)))
    with pytest.raises(NotRealizableError):
        EghInput(bad.ideal(), bad)
    inp = EghInput(IdealPresentation(2, (x1 * x1 + x2 * x2, x1 ** 2 - x2 ** 2)), seq)
    assert inp.containment == "verified by membership"
    assert pure_input((2, 2)).containment == "generators include the sequence"


# -- factor ordering ---------------------------------------------------------

def test_single_factor_is_identity():
    x1, x2 = variables(2)
    J = IdealPresentation(2, (x1 ** 2, x2))
    assert factor_order(J, [x2], 1) == (0,)


def test_order_on_six_variables_prefers_the_form_with_a_multiple_in_I2(ex6):
    qs = ex6.sequence.last_factors
    # (x1 - x5) * l6 lies in I_2 while nothing of the form x6 * v does
    x = variables(6)
    assert ex6.ideal.contains((x[0] - x[4]) * qs[2])
    assert slice_intersection_dims(ex6.ideal, qs, 0, 2) == [0, 0, 1]
    assert slice_intersection_dims(ex6.ideal, qs, 1, 2) == [0, 0]
    step = theorem21_degree_step(ex6, 2)
    assert step.order == (2, 0, 1)


def _chain_values(J, qs, order, d):
    vals = []
    for k in range(len(qs) - 1):
        colon = colon_component(J, [qs[c] for c in order[:k]], d - k)
        vals.append(intersect_dim(colon, principal_component(qs[order[k]], d - k)))
    return vals


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_greedy_order_attains_chain_maxima(seed):
    rng = random.Random(seed)
    n = 3
    x = variables(n)
    qs = [random_form(rng, n, 1, terms=2) for _ in range(3)]
    gens = [random_form(rng, n, 2) for _ in range(rng.randint(1, 3))]
    if rng.random() < 0.5:
        # put one factor times S_1 into J
        k = rng.randrange(3)
        gens += [qs[k] * v for v in x]
    J = IdealPresentation(n, tuple(gens))
    d = 2
    order = factor_order(J, qs, d)
    got = _chain_values(J, qs, order, d)
    # at each step the chosen factor beats every remaining one
    for k in range(len(qs) - 1):
        colon = colon_component(J, [qs[c] for c in order[:k]], d - k)
        for c in order[k:]:
            assert got[k] >= intersect_dim(colon, principal_component(qs[c], d - k))
    # and the lexicographically best chain over all orders is the greedy one
    best = max(_chain_values(J, qs, p, d) for p in itertools.permutations(range(3)))
    assert got == best
    assert order_factors(J, qs, d) == [qs[c] for c in order]


def test_factor_already_in_J_is_chosen_first():
    x1, x2, x3 = variables(3)
    q = x1 + x2
    J = IdealPresentation(3, tuple(q * v for v in (x1, x2, x3)))
    assert factor_order(J, [x3, x2, q], 2)[0] == 2


# -- one degree --------------------------------------------------------------

def test_step_on_the_sequence_itself_gives_pure_powers():
    inp = pure_input((2, 2, 3))
    for d in range(5):
        step = theorem21_degree_step(inp, d)
        assert step.K.generator_strings() == ["x1^2", "x2^2", "x3^3"]
        assert step.k_hilbert == step.j_hilbert


def test_step_five_variables_degree_2(ex5):
    step = theorem21_degree_step(ex5, 2)
    assert [tuple(s.hilbert) for s in step.slices] == [(1, 4, 4, 1), (1, 4, 2)]
    assert tuple(step.k_hilbert) == (1, 5, 8, 3)
    assert step.K.generator_strings() == [
        "x1^2", "x1*x2", "x1*x3", "x2^2", "x3^2", "x4^2", "x5^2", "x1*x4*x5", "x2*x3*x5"]


def test_step_six_variables_degree_2_in_given_order(ex6):
    step = theorem21_degree_step(ex6, 2, order=(0, 1, 2))
    expected = [(1, 5, 8, 2, 0), (1, 5, 6, 0), (1, 5, 2, 0)]
    for sl, full in zip(step.slices, expected):
        assert tuple(sl.hilbert) == full[:len(sl.hilbert)]
    assert tuple(step.k_hilbert) == (1, 6, 14, 13)
    assert tuple(theorem21_degree_step(ex6, 2).k_hilbert) == (1, 6, 14, 13)


def test_step_rejects_bad_arguments(ex5):
    with pytest.raises(ArgumentError):
        theorem21_degree_step(ex5, 2, order=(0, 0))
    with pytest.raises(ArgumentError):
        theorem21_degree_step(ex5, -1)


@pytest.mark.parametrize("d", range(0, 7))
def test_step_matches_in_degree_d(ex5, d):
    H = ex5.ideal.hilbert(7)
    step = theorem21_degree_step(ex5, d)
    assert step.k_hilbert[d] == H[d]
    assert step.k_hilbert[d + 1] >= H[d + 1]


def test_transport_keeps_factor_counts(ex6):
    q = ex6.sequence.last_factors[2]
    sub = transport_sequence(ex6.sequence, q)
    assert sub.nvars == 5 and sub.degrees == (2, 2, 2, 2, 2)


# -- whole construction ------------------------------------------------------

def test_sequence_alone_gives_pure_powers():
    res = egh_construct(pure_input((2, 2, 3)))
    assert res.output == LppIdeal.pure_powers((2, 2, 3), 5)
    assert res.report.ok


def test_five_variable_example(ex5):
    res = egh_construct(ex5)
    assert tuple(res.hilbert)[:5] == (1, 5, 8, 3, 0)
    assert res.output.hilbert() == res.hilbert
    assert all(res.output.contains(tuple(2 if j == i else 0 for j in range(5))) for i in range(5))
    assert res.report.ok
    assert [tuple(h) for h in res.report.slices] == [(1, 4, 4, 1, 0, 0, 0), (1, 4, 2, 0, 0, 0)]


def test_six_variable_example(ex6):
    res = egh_construct(ex6)
    assert tuple(res.hilbert)[:6] == (1, 6, 14, 13, 2, 0)
    assert res.output.hilbert() == res.hilbert
    for i, a in enumerate((2, 2, 2, 2, 2, 3)):
        assert res.output.contains(tuple(a if j == i else 0 for j in range(6)))
    assert [tuple(h)[:4] for h in res.report.slices] == [(1, 5, 8, 2), (1, 5, 6, 0), (1, 5, 2, 0)]


def test_recursive_and_direct_modes_agree(ex5, ex6):
    for inp in (ex5, ex6):
        a = egh_construct(inp, recursive=True)
        b = egh_construct(inp, recursive=False)
        assert a.output == b.output


def test_outputs_are_deterministic(ex6):
    assert egh_construct(ex6).generator_strings() == egh_construct(ex6).generator_strings()


def test_one_variable():
    x1 = variables(1)[0]
    seq = SplitSequence(1, ((x1, x1, x1),))
    inp = EghInput(IdealPresentation(1, (x1 ** 2,)), seq)
    res = egh_construct(inp)
    assert res.generator_strings() == ["x1^2"]
    assert res.report.ok


def test_maxdeg_truncation(ex5):
    res = egh_construct(ex5, maxdeg=3)
    assert tuple(res.hilbert) == (1, 5, 8, 3)
    with pytest.raises(ArgumentError):
        egh_construct(ex5, maxdeg=-1)


def test_diagnostics_add_slice_independence(ex6):
    res = egh_construct(ex6, diagnostics=True)
    assert res.report.slice_independence == [True, True, True]
    d = res.report.to_dict()
    assert d["ok"] and len(d["steps"]) == 9


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 10_000))
def test_random_inputs_end_to_end(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    seq = random_quadratic(rng, n).as_split()
    extra = [random_form(rng, n, rng.randint(2, 3)) for _ in range(rng.randint(0, 3))]
    inp = EghInput.from_generators(extra, seq)
    res = egh_construct(inp)
    D = seq.truncation()
    want = oracles.hilbert([oracles.to_dict(g) for g in inp.ideal.generators], n, D)
    assert tuple(res.output.hilbert()) == want
    assert res.report.ok
    assert kk_bound_check(res.hilbert) == (True, None)


@settings(max_examples=6, deadline=None)
@given(st.integers(0, 10_000))
def test_random_cubic_last_form(seed):
    rng = random.Random(seed)
    n = 3
    quad = random_quadratic(rng, n)
    facs = list(quad.as_split().factors)
    facs[-1] = facs[-1] + (random_form(rng, n, 1, terms=2),)
    seq = SplitSequence(n, tuple(facs))
    if not oracles.hilbert([oracles.to_dict(f) for f in seq.forms], n, seq.truncation())[-1] == 0:
        return
    extra = [random_form(rng, n, rng.randint(2, 3)) for _ in range(rng.randint(1, 2))]
    inp = EghInput.from_generators(extra, seq)
    res = egh_construct(inp)
    assert res.report.ok


# -- slice independence ------------------------------------------------------

def test_slice_independence_examples(ex6):
    assert lemma20_check(pure_input((2, 2)).sequence, 0)
    assert lemma20_check(ex6.sequence, 0)
    with pytest.raises(ArgumentError):
        lemma20_check(ex6.sequence, 3)


def test_slice_independence_on_random_split_sequences():
    rng = random.Random(2)
    for _ in range(6):
        n = 3
        quad = random_quadratic(rng, n)
        facs = list(quad.as_split().factors)
        facs[-1] = facs[-1] + (random_form(rng, n, 1, terms=2),)
        seq = SplitSequence(n, tuple(facs))
        if seq.ideal().hilbert(seq.truncation())[seq.truncation()] != 0:
            continue
        assert all(lemma20_check(seq, j) for j in range(3))


# -- verifier ----------------------------------------------------------------

def test_verify_flags_a_tampered_output(ex5):
    res = egh_construct(ex5)
    gens = [tuple(g) for g in res.output.minimal_generators()]
    # drop x1*x4*x5: its degree-3 class comes back into the quotient
    gens.remove((1, 0, 0, 1, 1))
    bad = EghResult(MonomialIdeal(5, tuple(gens)), res.hilbert)
    rep = verify(ex5, bad)
    assert not rep.ok and rep.first_mismatch == 3
    assert rep.pure_powers_ok and rep.closure_ok


def test_verify_detects_missing_power(ex5):
    res = egh_construct(ex5)
    gens = [tuple(g) for g in res.output.minimal_generators() if tuple(g) != (0, 0, 0, 0, 2)]
    rep = verify(ex5, EghResult(MonomialIdeal(5, tuple(gens)), res.hilbert))
    assert not rep.pure_powers_ok


def test_slice_table_telescopes(ex6):
    H = ex6.ideal.hilbert(6)
    sl = slice_hilbert_functions(ex6.ideal, ex6.sequence.last_factors, 6)
    for t in range(7):
        assert sum(h[t - i] for i, h in enumerate(sl) if 0 <= t - i <= h.truncation) == H[t]
