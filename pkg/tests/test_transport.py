from __future__ import annotations

import numpy as np
import pytest

from fakefeed.transport import solve_transport
from oracles import transport_cost_2x2, transport_cost_bruteforce


def random_marginal(rng, n):
    raw = rng.random(n) + 0.05
    return raw / raw.sum()


def test_identity_transport_costs_nothing():
    cost = np.array([[0.0, 1.0], [1.0, 0.0]])
    plan = solve_transport(cost, [0.5, 0.5], [0.5, 0.5])
    assert plan.cost == pytest.approx(0.0, abs=1e-12)


def test_unique_plan_1x2():
    # One source splits across two sinks: the plan is forced.
    cost = np.array([[3.0, 2.0]])
    plan = solve_transport(cost, [1.0], [0.5, 0.5])
    assert plan.cost == pytest.approx(2.5, abs=1e-12)


def test_spec_2x2_example():
    # Points a=0, c=3 vs b=1, d=4; cost 3-4t minimized at t=1/2.
    cost = np.array([[1.0, 4.0], [2.0, 1.0]])
    plan = solve_transport(cost, [0.5, 0.5], [0.5, 0.5])
    assert plan.cost == pytest.approx(1.0, abs=1e-12)


def test_plan_satisfies_marginals():
    rng = np.random.default_rng(11)
    for _ in range(50):
        n, m = rng.integers(1, 6), rng.integers(1, 6)
        a, b = random_marginal(rng, n), random_marginal(rng, m)
        cost = rng.random((n, m)) * 5
        plan = solve_transport(cost, a, b)
        assert np.allclose(plan.flow.sum(axis=1), a, atol=1e-9)
        assert np.allclose(plan.flow.sum(axis=0), b, atol=1e-9)
        assert (plan.flow >= -1e-12).all()


def test_matches_2x2_line_search_oracle():
    rng = np.random.default_rng(23)
    for _ in range(300):
        a = random_marginal(rng, 2)
        b = random_marginal(rng, 2)
        cost = rng.random((2, 2)) * 10
        ours = solve_transport(cost, a, b).cost
        oracle = transport_cost_2x2(cost, a, b)
        assert ours == pytest.approx(oracle, rel=1e-9, abs=1e-9)


def test_matches_bruteforce_on_3x3():
    rng = np.random.default_rng(37)
    for _ in range(100):
        a = random_marginal(rng, 3)
        b = random_marginal(rng, 3)
        cost = rng.random((3, 3)) * 10
        ours = solve_transport(cost, a, b).cost
        oracle = transport_cost_bruteforce(cost, a, b)
        assert ours == pytest.approx(oracle, rel=1e-9, abs=1e-9)


def test_degenerate_equal_marginals():
    # Identical distributions exercise zero-flow basic cells heavily.
    cost = np.array([[0.0, 2.0, 5.0], [2.0, 0.0, 9.0], [5.0, 9.0, 0.0]])
    third = np.array([1 / 3, 1 / 3, 1 / 3])
    plan = solve_transport(cost, third, third)
    assert plan.cost == pytest.approx(0.0, abs=1e-12)


def test_rectangular_problems_against_bruteforce():
    rng = np.random.default_rng(51)
    for _ in range(60):
        n, m = int(rng.integers(1, 5)), int(rng.integers(1, 5))
        a = random_marginal(rng, n)
        b = random_marginal(rng, m)
        cost = rng.random((n, m)) * 4
        ours = solve_transport(cost, a, b).cost
        oracle = transport_cost_bruteforce(cost, a, b)
        assert ours == pytest.approx(oracle, rel=1e-9, abs=1e-9)


def test_rejects_bad_inputs():
    cost = np.zeros((2, 2))
    with pytest.raises(ValueError, match="unbalanced"):
        solve_transport(cost, [0.7, 0.2], [0.5, 0.5])
    with pytest.raises(ValueError, match="non-negative"):
        solve_transport(cost, [-0.5, 1.5], [0.5, 0.5])
    with pytest.raises(ValueError, match="shapes"):
        solve_transport(cost, [1.0], [0.5, 0.5])
