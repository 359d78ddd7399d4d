import json

import numpy as np
import pytest
from scipy.optimize import linprog

from intervalgebra.core import GElement, g_center, g_length
from intervalgebra.errors import InconsistentDimensions, LpFormatError, NegativeRhs
from intervalgebra.lp import (
    LpProblem,
    LpStatus,
    PivotStatus,
    Tableau,
    choose_pivot,
    load_problem,
    outcome_to_json,
    pivot_step,
    problem_from_json,
    residual,
    solve,
    tableau_new,
)


def textbook_simplex(A, b, c, max_iters=200):
    """Dense tableau simplex on real data: largest cost enters, min ratio leaves (first index)."""
    A = np.asarray(A, float)
    p, n = A.shape
    T = np.hstack([A, np.eye(p), np.asarray(b, float)[:, None]])
    cost = np.concatenate([np.asarray(c, float), np.zeros(p)])
    basis = list(range(n, n + p))
    z, trace = 0.0, []
    for _ in range(max_iters):
        k = int(np.argmax(cost))
        if cost[k] <= 0:
            x = np.zeros(n + p)
            x[basis] = T[:, -1]
            return "optimal", x[:n], z, trace
        rows = [j for j in range(p) if T[j, k] > 1e-12]
        if not rows:
            return "unbounded", None, None, trace
        i = min(rows, key=lambda j: (T[j, -1] / T[j, k], j))
        T[i] /= T[i, k]
        for j in range(p):
            if j != i:
                T[j] -= T[j, k] * T[i]
        z += cost[k] * T[i, -1]
        cost = cost - cost[k] * T[i, :-1]
        basis[i] = k
        trace.append((i, k))
    return "iteration_cap", None, None, trace


def random_problem(rng, n, p, interval=True):
    A = rng.integers(-2, 6, size=(p, n)).astype(float)
    A[0] = rng.integers(1, 4, size=n)   # one all-positive row keeps most instances bounded
    lo = rng.integers(0, 10, size=p).astype(float)
    width = rng.integers(0, 5, size=p).astype(float) if interval else np.zeros(p)
    B = [GElement(a, a + w) for a, w in zip(lo.tolist(), width.tolist())]
    c = rng.integers(-3, 8, size=n).astype(float)
    return LpProblem(A.tolist(), B, c.tolist())


ONE = LpProblem([[1.0, 1.0]], [GElement(2, 3)], [3.0, 2.0])


# --- setup and pivot choice -----------------------------------------------

def test_tableau_new_example():
    t = tableau_new(LpProblem([[1.0]], [GElement(2, 3)], [3.0]))
    assert t.basis == (1,)
    assert t.rhs == (GElement(2, 3),)
    assert np.array_equal(t.cost, [3.0, 0.0])
    assert np.array_equal(t.coeffs, [[1.0, 1.0]])


def test_tableau_new_errors():
    with pytest.raises(InconsistentDimensions):
        tableau_new(LpProblem([[1.0], [2.0]], [GElement(1, 2)], [1.0]))
    with pytest.raises(InconsistentDimensions):
        tableau_new(LpProblem([[1.0, 2.0], [1.0]], [GElement(1, 2)] * 2, [1.0, 1.0]))
    with pytest.raises(NegativeRhs):
        tableau_new(LpProblem([[1.0]], [GElement(-1, -2)], [1.0]))
    with pytest.raises(NegativeRhs):
        tableau_new(LpProblem([[1.0]], [GElement(-1, -1)], [1.0]))


def test_choose_pivot_examples():
    c = choose_pivot(tableau_new(ONE))
    assert (c.status, c.row, c.col) == (PivotStatus.PIVOT, 0, 0)
    t = tableau_new(LpProblem([[1.0]], [GElement(1, 2)], [-1.0]))
    assert choose_pivot(t).status is PivotStatus.NO_POSITIVE_COST
    t = tableau_new(LpProblem([[-1.0]], [GElement(1, 1)], [1.0]))
    c = choose_pivot(t)
    assert c.status is PivotStatus.UNBOUNDED_COLUMN and c.col == 0


def test_ratio_rule_uses_lengths_then_centers():
    # row 1 is the tighter constraint classically but has the longer interval
    t = tableau_new(LpProblem([[1.0], [1.0]], [GElement(0, 4), GElement(5, 6)], [1.0]))
    assert choose_pivot(t).row == 1
    t = tableau_new(LpProblem([[1.0], [2.0]], [GElement(3, 3), GElement(4, 4)], [1.0]))
    assert choose_pivot(t).row == 1


def test_pivot_step_example():
    t = pivot_step(tableau_new(ONE), 0, 0)
    assert t.rhs == (GElement(2, 3),)
    assert t.objective == GElement(6, 9)
    assert t.basis == (0,)
    assert choose_pivot(t).status is PivotStatus.NO_POSITIVE_COST


def test_pivot_keeps_other_rhs_positive():
    t = tableau_new(LpProblem([[1.0], [2.0]], [GElement(1, 2), GElement(1, 5)], [1.0]))
    ch = choose_pivot(t)
    assert ch.row == 0   # 1/1 < 4/2
    t = pivot_step(t, ch.row, ch.col)
    assert t.rhs[1] == GElement(-1, 1)
    assert g_length(t.rhs[1]) > 0


def test_point_pivot_is_classical():
    t = pivot_step(tableau_new(LpProblem([[1.0, 2.0], [3.0, 1.0]], [GElement(4, 4), GElement(6, 6)],
                                         [1.0, 1.0])), 1, 0)
    assert t.rhs[0] == GElement(2, 2) and t.rhs[1] == GElement(2, 2)
    assert np.allclose(t.coeffs, [[0, 5 / 3, 1, -1 / 3], [1, 1 / 3, 0, 1 / 3]])


# --- solve ----------------------------------------------------------------

def test_solve_examples():
    out = solve(LpProblem([[1.0]], [GElement(2, 3)], [3.0]))
    assert out.status is LpStatus.OPTIMAL
    assert out.x == [GElement(2, 3)] and out.objective == GElement(6, 9) and out.pivots == 1
    out = solve(ONE)
    assert out.x == [GElement(2, 3), GElement(0, 0)] and out.objective == GElement(6, 9)
    out = solve(LpProblem([[-1.0]], [GElement(1, 1)], [1.0]))
    assert out.status is LpStatus.UNBOUNDED and out.column == 0


def test_iteration_cap():
    out = solve(ONE, max_iters=0)
    assert out.status is LpStatus.ITERATION_CAP and out.pivots == 0


def test_equality_form():
    A = [[1.0, 1.0, 1.0, 0.0], [1.0, -1.0, 0.0, 1.0]]
    B = [GElement(4, 6), GElement(1, 2)]
    eq = solve(LpProblem(A, B, [2.0, 1.0, 0.0, 0.0], form="equality", basis=[2, 3]))
    ineq = solve(LpProblem([row[:2] for row in A], B, [2.0, 1.0]))
    assert eq.status is ineq.status is LpStatus.OPTIMAL
    assert eq.x[:2] == ineq.x and eq.objective == ineq.objective
    assert residual(LpProblem(A, B, [2.0, 1.0, 0.0, 0.0], form="equality", basis=[2, 3]), eq) < 1e-9
    with pytest.raises(InconsistentDimensions):
        tableau_new(LpProblem(A, B, [1.0] * 4, form="equality", basis=[0, 1]))


def test_point_lps_match_textbook_simplex():
    rng = np.random.default_rng(11)
    checked = 0
    for _ in range(50):
        n, p = int(rng.integers(1, 6)), int(rng.integers(1, 6))
        prob = random_problem(rng, n, p, interval=False)
        b = [x.p for x in prob.B]
        status, x, z, trace = textbook_simplex(prob.A, b, prob.c)
        out = solve(prob)
        assert out.status.value == status
        assert out.trace == trace
        if status == "optimal":
            checked += 1
            assert g_length(out.objective) == 0
            assert g_center(out.objective) == pytest.approx(z, abs=1e-9)
            assert [v.p for v in out.x] == pytest.approx(x.tolist(), abs=1e-9)
            ref = linprog(-np.asarray(prob.c), A_ub=prob.A, b_ub=b, bounds=(0, None), method="highs")
            assert -ref.fun == pytest.approx(z, abs=1e-9)
    assert checked >= 25


def test_rhs_positivity_after_every_pivot():
    rng = np.random.default_rng(5)
    optimal = 0

    def check(t: Tableau):
        for b in t.rhs:
            assert b.p <= b.q + 1e-9 * max(1.0, abs(b.p), abs(b.q))
            if abs(b.q - b.p) <= 1e-12:
                assert b.p >= -1e-9

    for _ in range(1000):
        prob = random_problem(rng, int(rng.integers(1, 7)), int(rng.integers(1, 7)))
        out = solve(prob, callback=check)
        if out.status is LpStatus.OPTIMAL:
            optimal += 1
            assert residual(prob, out) < 1e-9
    assert optimal > 500


@pytest.mark.parametrize("seed", range(20))
def test_pivots_invariant_under_row_scaling(seed):
    rng = np.random.default_rng(100 + seed)
    prob = random_problem(rng, 4, 4)
    lam = 2.0 ** rng.integers(-4, 5, size=4)
    A = [[v * s for v in row] for row, s in zip(prob.A, lam.tolist())]
    B = [GElement(b.p * s, b.q * s) for b, s in zip(prob.B, lam.tolist())]
    assert solve(LpProblem(A, B, prob.c)).trace == solve(prob).trace


@pytest.mark.parametrize("seed", range(20))
def test_objective_monotone(seed):
    rng = np.random.default_rng(200 + seed)
    for interval in (False, True):
        prob = random_problem(rng, 5, 5, interval=interval)
        objs = [tableau_new(prob).objective]
        solve(prob, callback=lambda t: objs.append(t.objective))
        # on interval data only the length is monotone: the leaving row may
        # carry an interval with negative center
        track = [g_length(o) for o in objs] if interval else [g_center(o) for o in objs]
        assert all(b >= a - 1e-9 for a, b in zip(track, track[1:]))


# --- JSON -----------------------------------------------------------------

DOC = {"objective": [3, 2], "constraints": [{"coeffs": [1, 1], "rhs": {"lo": 2, "hi": 3}},
                                            {"coeffs": [0, 1], "rhs": {"point": 5}}], "sense": "max"}


def test_problem_from_json():
    prob = problem_from_json(DOC)
    assert prob.A == [[1.0, 1.0], [0.0, 1.0]]
    assert prob.B == [GElement(2, 3), GElement(5, 5)]
    assert prob.c == [3.0, 2.0]


@pytest.mark.parametrize("doc", [
    [],
    {**DOC, "sense": "min"},
    {**DOC, "objective": "x^2 + y"},
    {**DOC, "objective": [1, "x"]},
    {**DOC, "constraints": [{"coeffs": [1, 1]}]},
    {**DOC, "constraints": [{"coeffs": [1, 1], "rhs": {"lo": 3, "hi": 2}}]},
    {**DOC, "constraints": [{"coeffs": [1, True], "rhs": {"point": 1}}]},
])
def test_problem_from_json_rejects(doc):
    with pytest.raises(LpFormatError):
        problem_from_json(doc)


def test_point_row_leaves_first():
    # a point right-hand side has length ratio 0 and always wins the ratio test,
    # even when classically it is not binding
    doc = {**DOC, "constraints": [DOC["constraints"][0], {"coeffs": [1, 0], "rhs": {"point": 5}}]}
    out = solve(problem_from_json(doc))
    assert out.x[0] == GElement(5, 5) and out.x[1] == GElement(-3, -2)
    assert g_length(out.x[1]) > 0


def test_load_problem(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps(DOC))
    out = solve(load_problem(path))
    doc = outcome_to_json(out)
    assert doc == {"status": "optimal", "pivots": 1,
                   "solution": [{"lo": 2.0, "hi": 3.0}, {"lo": 0.0, "hi": 0.0}],
                   "objective": {"lo": 6.0, "hi": 9.0}, "objective_center": 7.5}
    path.write_text("{not json")
    with pytest.raises(LpFormatError):
        load_problem(path)
    with pytest.raises(OSError):
        load_problem(tmp_path / "missing.json")


def test_unbounded_json():
    out = solve(LpProblem([[-1.0]], [GElement(1, 1)], [1.0]))
    assert outcome_to_json(out) == {"status": "unbounded", "pivots": 0, "column": 0}
