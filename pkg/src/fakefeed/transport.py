"""Exact solver for the balanced transportation problem.

Classic primal transportation simplex: north-west-corner starting basis,
u/v duals from the basis tree, Bland's pivoting rule throughout.  Degenerate
marginals are handled by tie-breaking in the basis selection (zero-flow
basic cells), never by perturbing values.  Problem sizes here are tiny
(phrase vocabularies), so exactness costs nothing.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_OPT_TOL = 1e-10
_MASS_TOL = 1e-9


@dataclass(frozen=True)
class TransportPlan:
    cost: float
    flow: np.ndarray  # shape (n, m); row sums = supply, column sums = demand


def _northwest_corner(supply: np.ndarray, demand: np.ndarray):
    n, m = len(supply), len(demand)
    flow = np.zeros((n, m))
    basis: list[tuple[int, int]] = []
    a = supply.astype(float).copy()
    b = demand.astype(float).copy()
    i = j = 0
    for _ in range(n + m - 1):
        q = min(a[i], b[j])
        flow[i, j] = q
        basis.append((i, j))
        a[i] -= q
        b[j] -= q
        if i == n - 1 and j == m - 1:
            break
        if i == n - 1:
            j += 1
        elif j == m - 1:
            i += 1
        elif a[i] <= b[j]:
            i += 1
        else:
            j += 1
    return flow, basis


def _duals(cost: np.ndarray, basis: list[tuple[int, int]], n: int, m: int):
    u = np.full(n, np.nan)
    v = np.full(m, np.nan)
    u[0] = 0.0
    remaining = list(basis)
    while remaining:
        progressed = False
        unresolved = []
        for (i, j) in remaining:
            if not np.isnan(u[i]):
                v[j] = cost[i, j] - u[i]
                progressed = True
            elif not np.isnan(v[j]):
                u[i] = cost[i, j] - v[j]
                progressed = True
            else:
                unresolved.append((i, j))
        if not progressed:
            raise RuntimeError("basis graph is not connected")
        remaining = unresolved
    return u, v


def _basis_cycle(basis: set[tuple[int, int]], entering: tuple[int, int]) -> list[tuple[int, int]]:
    """Alternating cycle created by adding *entering* to the basis tree."""
    i0, j0 = entering
    # Path from row node i0 to column node j0 through basis edges.
    adjacency: dict[tuple[str, int], list[tuple[str, int]]] = {}
    for (i, j) in basis:
        adjacency.setdefault(("r", i), []).append(("c", j))
        adjacency.setdefault(("c", j), []).append(("r", i))
    start, goal = ("r", i0), ("c", j0)
    parents: dict[tuple[str, int], tuple[str, int]] = {start: start}
    queue = [start]
    while queue:
        node = queue.pop(0)
        if node == goal:
            break
        for neighbor in adjacency.get(node, []):
            if neighbor not in parents:
                parents[neighbor] = node
                queue.append(neighbor)
    if goal not in parents:
        raise RuntimeError("entering cell closes no cycle; basis is not spanning")
    path = [goal]
    while path[-1] != start:
        path.append(parents[path[-1]])
    path.reverse()  # r(i0), c(.), r(.), ..., c(j0)

    cycle = [entering]
    for a, b in zip(path, path[1:]):
        (ka, xa), (kb, xb) = a, b
        cycle.append((xa, xb) if ka == "r" else (xb, xa))
    return cycle


def solve_transport(cost: np.ndarray, supply, demand, *, max_pivots: int = 100_000) -> TransportPlan:
    """Minimize sum(flow * cost) over the transportation polytope, exactly."""
    cost = np.asarray(cost, dtype=np.float64)
    a = np.asarray(supply, dtype=np.float64)
    b = np.asarray(demand, dtype=np.float64)
    n, m = cost.shape
    if a.shape != (n,) or b.shape != (m,):
        raise ValueError("marginal shapes do not match the cost matrix")
    if (a < 0).any() or (b < 0).any():
        raise ValueError("marginals must be non-negative")
    if abs(a.sum() - b.sum()) > _MASS_TOL:
        raise ValueError(f"unbalanced marginals: {a.sum()} vs {b.sum()}")

    flow, basis_list = _northwest_corner(a, b)
    basis = set(basis_list)

    for _ in range(max_pivots):
        u, v = _duals(cost, sorted(basis), n, m)
        reduced = cost - u[:, None] - v[None, :]

        entering = None
        for i in range(n):  # Bland: smallest (i, j) keeps pivoting finite
            for j in range(m):
                if (i, j) not in basis and reduced[i, j] < -_OPT_TOL:
                    entering = (i, j)
                    break
            if entering:
                break
        if entering is None:
            return TransportPlan(cost=float((flow * cost).sum()), flow=flow)

        cycle = _basis_cycle(basis, entering)
        donors = cycle[1::2]  # odd positions give up flow
        theta = min(flow[c] for c in donors)
        leaving = min(c for c in donors if flow[c] <= theta)
        for idx, cell in enumerate(cycle):
            flow[cell] += theta if idx % 2 == 0 else -theta
        flow[leaving] = 0.0
        basis.remove(leaving)
        basis.add(entering)
    raise RuntimeError("pivot limit exceeded")
