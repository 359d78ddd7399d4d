"""Simplex method for linear programs with interval right-hand sides.

The constraint matrix and objective stay real; only the right-hand side and
hence the basic variable values are completed intervals.  Because addition and
scaling are componentwise in the (p, q) chart, each pivot acts on both
coordinates of the RHS at once.  The leaving row minimizes ``l(B_j) / a_jk``,
which is what keeps every updated RHS positive.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .core import GElement, Sign, g_add, g_center, g_length, g_scale, g_sign, g_sub
from .errors import InconsistentDimensions, LpFormatError, NegativeRhs, PositivityLost
from .text import gelement_to_json, round_real

PIVOT_TOL = 1e-12
POSITIVITY_TOL = 1e-9
RATIO_TIE_TOL = 1e-9


@dataclass(frozen=True)
class LpProblem:
    """Maximize ``c . x`` subject to ``A x <= B`` (or ``A x = B``), ``x >= 0``."""

    A: Sequence[Sequence[float]]
    B: Sequence[GElement]
    c: Sequence[float]
    form: str = "inequality"
    basis: Sequence[int] | None = None   # identity sub-basis, equality form only

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.A), len(self.c)


@dataclass(frozen=True)
class Tableau:
    coeffs: np.ndarray          # p x N, basic columns form an identity
    rhs: tuple[GElement, ...]
    cost: np.ndarray            # reduced costs; positive entries can enter
    objective: GElement
    basis: tuple[int, ...]
    iteration: int = 0
    n_original: int = 0

    def values(self) -> list[GElement]:
        x = [GElement.zero()] * self.coeffs.shape[1]
        for row, col in enumerate(self.basis):
            x[col] = self.rhs[row]
        return x


def _rhs_nonnegative(b: GElement, tol: float = 0.0) -> bool:
    scale = max(1.0, abs(b.p), abs(b.q))
    s = g_sign(b, tol * scale)
    if s.kind is Sign.NEGATIVE:
        return False
    if s.kind is Sign.POINT:
        return s.value >= -tol * scale
    return True


def tableau_new(problem: LpProblem) -> Tableau:
    p, n = problem.shape
    if any(len(row) != n for row in problem.A) or len(problem.B) != p:
        raise InconsistentDimensions(f"A has rows of lengths {[len(r) for r in problem.A]}, "
                                     f"B has {len(problem.B)} entries, c has {n}")
    A = np.asarray(problem.A, dtype=float).reshape(p, n)
    for i, b in enumerate(problem.B):
        if not _rhs_nonnegative(b):
            raise NegativeRhs(f"right-hand side {i} = {tuple(b)} is not a positive class or nonnegative point")
    c = np.asarray(problem.c, dtype=float)
    if problem.form == "inequality":
        coeffs = np.hstack([A, np.eye(p)])
        cost = np.concatenate([c, np.zeros(p)])
        return Tableau(coeffs, tuple(problem.B), cost, GElement.zero(), tuple(range(n, n + p)), 0, n)
    if problem.form != "equality":
        raise ValueError(f"unknown constraint form {problem.form!r}")
    basis = tuple(problem.basis or ())
    if len(basis) != p or not np.array_equal(A[:, list(basis)], np.eye(p)):
        raise InconsistentDimensions("equality form needs an identity sub-basis")
    cost = c - c[list(basis)] @ A
    objective = GElement.zero()
    for row, col in enumerate(basis):
        objective = g_add(objective, g_scale(float(c[col]), problem.B[row]))
    return Tableau(A.copy(), tuple(problem.B), cost, objective, basis, 0, n)


class PivotStatus(enum.Enum):
    PIVOT = "pivot"
    NO_POSITIVE_COST = "no-positive-cost"
    UNBOUNDED_COLUMN = "unbounded-column"


@dataclass(frozen=True)
class PivotChoice:
    status: PivotStatus
    row: int | None = None
    col: int | None = None


def choose_pivot(t: Tableau) -> PivotChoice:
    k = int(np.argmax(t.cost))   # first index among ties
    if not t.cost[k] > 0:
        return PivotChoice(PivotStatus.NO_POSITIVE_COST)
    keys = []
    for j in range(t.coeffs.shape[0]):
        a = float(t.coeffs[j, k])
        if a > PIVOT_TOL:
            keys.append((g_length(t.rhs[j]) / a, g_center(t.rhs[j]) / a, j))
    if not keys:
        return PivotChoice(PivotStatus.UNBOUNDED_COLUMN, col=k)
    # Length ratios that agree up to rounding are ties; the center ratio decides
    # them, otherwise a tied row collapses to a negative point.
    m = min(key[0] for key in keys)
    tied = [key for key in keys if key[0] <= m + RATIO_TIE_TOL * max(1.0, abs(m))]
    return PivotChoice(PivotStatus.PIVOT, min(tied, key=lambda key: (key[1], key[2]))[2], k)


def pivot_step(t: Tableau, row: int, col: int) -> Tableau:
    i, k = row, col
    a_ik = float(t.coeffs[i, k])
    if not a_ik > 0:
        raise ValueError("pivot element must be positive")
    coeffs = t.coeffs.copy()
    rhs = list(t.rhs)
    for j in range(coeffs.shape[0]):
        if j == i:
            continue
        a_jk = float(t.coeffs[j, k])
        coeffs[j] = (a_ik * t.coeffs[j] - a_jk * t.coeffs[i]) / a_ik
        b = g_sub(g_scale(a_ik, t.rhs[j]), g_scale(a_jk, t.rhs[i]))
        rhs[j] = g_scale(1 / a_ik, b)
        if not _rhs_nonnegative(rhs[j], POSITIVITY_TOL):
            raise PositivityLost(f"row {j} became {tuple(rhs[j])} after pivot ({i}, {k})")
    coeffs[i] = t.coeffs[i] / a_ik
    rhs[i] = g_scale(1 / a_ik, t.rhs[i])
    coeffs[:, k] = 0.0
    coeffs[i, k] = 1.0
    d_k = float(t.cost[k])
    cost = t.cost - d_k * t.coeffs[i] / a_ik
    cost[k] = 0.0
    objective = g_add(t.objective, g_scale(d_k / a_ik, t.rhs[i]))
    basis = list(t.basis)
    basis[i] = k
    return replace(t, coeffs=coeffs, rhs=tuple(rhs), cost=cost, objective=objective,
                   basis=tuple(basis), iteration=t.iteration + 1)


class LpStatus(enum.Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    ITERATION_CAP = "iteration_cap"


@dataclass
class LpOutcome:
    status: LpStatus
    x: list[GElement] | None = None
    objective: GElement | None = None
    pivots: int = 0
    column: int | None = None
    basis: tuple[int, ...] = ()
    slacks: list[GElement] = field(default_factory=list)
    trace: list[tuple[int, int]] = field(default_factory=list)


def solve(problem: LpProblem, max_iters: int | None = None,
          callback: Callable[[Tableau], None] | None = None) -> LpOutcome:
    t = tableau_new(problem)
    p, n = problem.shape
    if max_iters is None:
        max_iters = 10 * (n + p)
    trace: list[tuple[int, int]] = []
    while True:
        choice = choose_pivot(t)
        if choice.status is PivotStatus.NO_POSITIVE_COST:
            values = t.values()
            return LpOutcome(LpStatus.OPTIMAL, values[:n], t.objective, t.iteration,
                             basis=t.basis, slacks=values[n:], trace=trace)
        if choice.status is PivotStatus.UNBOUNDED_COLUMN:
            return LpOutcome(LpStatus.UNBOUNDED, pivots=t.iteration, column=choice.col,
                             basis=t.basis, trace=trace)
        if t.iteration >= max_iters:
            return LpOutcome(LpStatus.ITERATION_CAP, pivots=t.iteration, basis=t.basis, trace=trace)
        t = pivot_step(t, choice.row, choice.col)
        trace.append((choice.row, choice.col))
        if callback is not None:
            callback(t)


def residual(problem: LpProblem, outcome: LpOutcome) -> float:
    """Largest coordinate violation of ``A x (+ slack) = B``."""
    worst = 0.0
    for i, row in enumerate(problem.A):
        lhs = outcome.slacks[i] if problem.form == "inequality" else GElement.zero()
        for a, x in zip(row, outcome.x):
            lhs = g_add(lhs, g_scale(a, x))
        d = g_sub(lhs, problem.B[i])
        worst = max(worst, abs(d.p), abs(d.q))
    return worst


# --- JSON problem files ---------------------------------------------------

def _number(v, what: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
        raise LpFormatError(f"{what} must be a finite number, got {v!r}")
    return float(v)


def _rhs_from_json(obj, i: int) -> GElement:
    if isinstance(obj, dict) and set(obj) == {"point"}:
        v = _number(obj["point"], f"constraint {i} rhs point")
        return GElement.point(v)
    if isinstance(obj, dict) and set(obj) == {"lo", "hi"}:
        lo, hi = _number(obj["lo"], f"constraint {i} rhs lo"), _number(obj["hi"], f"constraint {i} rhs hi")
        if lo > hi:
            raise LpFormatError(f"constraint {i} rhs has lo > hi")
        return GElement(lo, hi)
    raise LpFormatError(f"constraint {i} rhs must be {{'lo','hi'}} or {{'point'}}")


def problem_from_json(doc) -> LpProblem:
    if not isinstance(doc, dict):
        raise LpFormatError("problem must be a JSON object")
    sense = doc.get("sense", "max")
    if sense != "max":
        raise LpFormatError(f"only 'max' problems are supported, got sense={sense!r}")
    objective = doc.get("objective")
    if not isinstance(objective, list):
        raise LpFormatError("objective must be a list of coefficients (nonlinear objectives are not supported)")
    c = [_number(v, "objective coefficient (only linear objectives are supported)") for v in objective]
    cons = doc.get("constraints")
    if not isinstance(cons, list):
        raise LpFormatError("constraints must be a list")
    A, B = [], []
    for i, con in enumerate(cons):
        if not isinstance(con, dict) or "coeffs" not in con or "rhs" not in con:
            raise LpFormatError(f"constraint {i} needs 'coeffs' and 'rhs'")
        if not isinstance(con["coeffs"], list):
            raise LpFormatError(f"constraint {i} coeffs must be a list")
        A.append([_number(v, f"constraint {i} coefficient") for v in con["coeffs"]])
        B.append(_rhs_from_json(con["rhs"], i))
    return LpProblem(A, B, c)


def load_problem(path: str | Path) -> LpProblem:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise LpFormatError(f"invalid JSON: {exc}") from exc
    return problem_from_json(doc)


def outcome_to_json(outcome: LpOutcome) -> dict:
    out: dict = {"status": outcome.status.value, "pivots": outcome.pivots}
    if outcome.status is LpStatus.OPTIMAL:
        out["solution"] = [gelement_to_json(x) for x in outcome.x]
        out["objective"] = gelement_to_json(outcome.objective)
        out["objective_center"] = round_real(g_center(outcome.objective))
    elif outcome.status is LpStatus.UNBOUNDED:
        out["column"] = outcome.column
    return out
