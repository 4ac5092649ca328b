import numpy as np
import pytest

from alpvreal import (
    ALPVSystem,
    DimensionMismatch,
    HorizonExceeded,
    InputSequence,
    InvalidAlphabet,
    NonFiniteEntry,
    convolution_output,
    markov_table,
    simulate,
    validate,
)

from helpers import random_run, random_system


def test_validate_fixture_ok(sigma_star):
    assert validate(sigma_star) is sigma_star


def test_validate_reports_reshaped_matrix(sigma_star):
    bad = ALPVSystem(
        A=sigma_star.A,
        B=[sigma_star.B[0], np.zeros((2, 1))],
        C=sigma_star.C,
    )
    with pytest.raises(DimensionMismatch, match=r"B\[2\]"):
        validate(bad)


def test_validate_empty_alphabet():
    with pytest.raises(InvalidAlphabet):
        validate(ALPVSystem(A=[], B=[], C=[]))


def test_validate_nonfinite():
    with pytest.raises(NonFiniteEntry):
        validate(ALPVSystem(A=[[[np.nan]]], B=[[[1.0]]], C=[[[1.0]]]))


def test_simulate_hand_recursion(sigma_star):
    w = InputSequence.from_pairs([((1, 0), (2,)), ((0, 1), (0,))])
    res = simulate(sigma_star, [0.0], w)
    assert res.states.shape == (3, 1)
    assert res.outputs.shape == (2, 1)
    assert res.states[1, 0] == pytest.approx(2.0)
    assert res.outputs[1, 0] == pytest.approx(4.0)


def test_simulate_zero_state_no_feedthrough(sigma_star):
    w = InputSequence.from_pairs([((0.3, -0.7), (5.0,))])
    res = simulate(sigma_star, [0.0], w)
    assert res.outputs[0, 0] == 0.0


def test_simulate_initial_state_readout(sigma_star):
    w = InputSequence.from_pairs([((1, 0), (0,))])
    assert simulate(sigma_star, [1.0], w).outputs[0, 0] == pytest.approx(1.0)


def test_simulate_final_input_never_matters(sigma_star):
    rng = np.random.default_rng(0)
    w = random_run(rng, 2, 1, 4)
    altered = InputSequence(
        scheduling=w.scheduling,
        inputs=np.vstack([w.inputs[:-1], [[123.0]]]),
    )
    r1 = simulate(sigma_star, [0.4], w)
    r2 = simulate(sigma_star, [0.4], altered)
    assert np.array_equal(r1.outputs, r2.outputs)


def test_simulate_dimension_mismatch(sigma_star):
    w = InputSequence.from_pairs([((1, 0, 0), (0,))])
    with pytest.raises(DimensionMismatch):
        simulate(sigma_star, [0.0], w)
    w = InputSequence.from_pairs([((1, 0), (0,))])
    with pytest.raises(DimensionMismatch):
        simulate(sigma_star, [0.0, 0.0], w)


def test_simulate_deterministic(sigma_star):
    rng = np.random.default_rng(5)
    w = random_run(rng, 2, 1, 6)
    a = simulate(sigma_star, [0.0], w)
    b = simulate(sigma_star, [0.0], w)
    assert np.array_equal(a.outputs, b.outputs)
    assert np.array_equal(a.states, b.states)


def test_convolution_fixture_value(sigma_star):
    table = markov_table(sigma_star, 2)
    w = InputSequence.from_pairs([((1, 0), (2,)), ((0, 1), (7.0,))])
    # only the k=0 term survives: S(12) * p1(0) p2(1) * u(0) = 2*1*1*2
    assert convolution_output(table, w)[0] == pytest.approx(4.0)


def test_convolution_zero_inputs_and_short_runs(sigma_star):
    table = markov_table(sigma_star, 4)
    rng = np.random.default_rng(1)
    w = InputSequence(scheduling=rng.uniform(-1, 1, (4, 2)), inputs=np.zeros((4, 1)))
    assert np.allclose(convolution_output(table, w), 0.0)
    w1 = random_run(rng, 2, 1, 1)
    assert np.allclose(convolution_output(table, w1), 0.0)


def test_convolution_horizon_guard(sigma_star):
    table = markov_table(sigma_star, 2)
    rng = np.random.default_rng(2)
    with pytest.raises(HorizonExceeded):
        convolution_output(table, random_run(rng, 2, 1, 3))


def test_convolution_matches_simulation(sigma_star, sigma2):
    rng = np.random.default_rng(3)
    for sys in (sigma_star, sigma2):
        table = markov_table(sys, 6)
        for _ in range(20):
            w = random_run(rng, sys.D, sys.m, int(rng.integers(1, 7)))
            direct = simulate(sys, np.zeros(sys.n), w).final_output
            assert np.allclose(direct, convolution_output(table, w), atol=1e-9)


def test_output_affine_in_each_scheduling_vector():
    # the zero-state output is affine in each p(i) with the others fixed
    # (terms driven by inputs after position i do not involve p(i)), so
    # affine combinations pass through; at the final position the constant
    # part vanishes and the map is homogeneous linear
    rng = np.random.default_rng(4)
    sys = random_system(rng, n=3, D=2, m=2, p=2)
    x0 = np.zeros(3)
    base = random_run(rng, 2, 2, 5)

    def with_sched(pos, vec):
        sched = base.scheduling.copy()
        sched[pos] = vec
        return simulate(sys, x0, InputSequence(sched, base.inputs)).final_output

    for pos in range(5):
        pa = rng.uniform(-1, 1, 2)
        pb = rng.uniform(-1, 1, 2)
        alpha, beta = 1.7, -0.7  # affine: alpha + beta = 1
        mixed = with_sched(pos, alpha * pa + beta * pb)
        assert np.allclose(
            mixed, alpha * with_sched(pos, pa) + beta * with_sched(pos, pb), atol=1e-10
        )
    pa = rng.uniform(-1, 1, 2)
    pb = rng.uniform(-1, 1, 2)
    alpha, beta = 0.7, -1.3  # unconstrained: linear at the last position
    mixed = with_sched(4, alpha * pa + beta * pb)
    assert np.allclose(
        mixed, alpha * with_sched(4, pa) + beta * with_sched(4, pb), atol=1e-10
    )


def test_output_linear_in_each_input():
    rng = np.random.default_rng(6)
    sys = random_system(rng, n=3, D=2, m=2, p=1)
    x0 = np.zeros(3)
    base = random_run(rng, 2, 2, 5)
    for pos in range(4):
        ua = rng.uniform(-1, 1, 2)
        ub = rng.uniform(-1, 1, 2)
        alpha, beta = 2.0, 0.25

        def with_input(vec):
            u = base.inputs.copy()
            u[pos] = vec
            return simulate(sys, x0, InputSequence(base.scheduling, u)).final_output

        zero = with_input(np.zeros(2))
        mixed = with_input(alpha * ua + beta * ub)
        lin = alpha * (with_input(ua) - zero) + beta * (with_input(ub) - zero) + zero
        assert np.allclose(mixed, lin, atol=1e-10)


def test_input_sequence_invariants():
    with pytest.raises(DimensionMismatch):
        InputSequence(scheduling=np.zeros((0, 2)), inputs=np.zeros((0, 1)))
    with pytest.raises(DimensionMismatch):
        InputSequence(scheduling=np.zeros((2, 2)), inputs=np.zeros((3, 1)))
    with pytest.raises(NonFiniteEntry):
        InputSequence(scheduling=[[np.inf]], inputs=[[0.0]])
