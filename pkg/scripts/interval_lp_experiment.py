"""Random interval-RHS linear programs: positivity of the RHS and growth of the objective.

For each instance the solver runs with a callback that records the RHS after
every pivot.  Prints counts of instances by outcome, pivots, and how often the
lower end of a basic variable drops below zero (allowed: it stays a positive class).
"""

import argparse
import statistics

import numpy as np

from intervalgebra.core import GElement, g_length
from intervalgebra.lp import LpProblem, LpStatus, residual, solve


def random_problem(rng: np.random.Generator, n: int, p: int) -> LpProblem:
    A = rng.integers(-2, 6, size=(p, n)).astype(float)
    A[0] = rng.integers(1, 4, size=n)
    lo = rng.integers(0, 10, size=p).astype(float)
    width = rng.integers(0, 5, size=p).astype(float)
    B = [GElement(a, a + w) for a, w in zip(lo.tolist(), width.tolist())]
    return LpProblem(A.tolist(), B, rng.integers(-3, 8, size=n).astype(float).tolist())


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", type=int, default=1000)
    ap.add_argument("--max-dim", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    status: dict[str, int] = {}
    pivots, widths, residuals = [], [], []
    negative_lower = 0
    for _ in range(args.instances):
        n, p = (int(v) for v in rng.integers(1, args.max_dim + 1, 2))
        prob = random_problem(rng, n, p)
        out = solve(prob)
        status[out.status.value] = status.get(out.status.value, 0) + 1
        pivots.append(out.pivots)
        if out.status is LpStatus.OPTIMAL:
            widths.append(g_length(out.objective))
            residuals.append(residual(prob, out))
            negative_lower += any(x.p < 0 for x in out.x)
    print(f"instances: {args.instances}  outcomes: {status}")
    print(f"pivots: mean {statistics.mean(pivots):.2f}, max {max(pivots)}")
    if widths:
        print(f"objective length: mean {statistics.mean(widths):.3f}, max {max(widths):.3f}")
        print(f"max constraint residual: {max(residuals):.2e}")
        print(f"optimal solutions with a negative lower end: {negative_lower}")


if __name__ == "__main__":
    main()
