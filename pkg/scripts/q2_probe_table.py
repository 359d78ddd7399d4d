"""Tabulate the differentiability probe of q2 at x0 = [1, 2] for both candidates.

Writes one tab-separated table per (candidate, region) pair, ready for plotting.
"""

import argparse

from intervalgebra.analysis import candidate_differential_q2, differentiability_probe, q2, region_first, region_straddle
from intervalgebra.core import GElement, g_scale
from intervalgebra.embed import bullet


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--x0", type=float, nargs=2, default=(1.0, 2.0))
    ap.add_argument("--samples", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--radii", type=float, nargs="+", default=[1e-1, 1e-2, 1e-3, 1e-4])
    args = ap.parse_args()

    x0 = GElement(*args.x0)
    candidates = {
        "literal 2 x0 . h": lambda h: g_scale(2, bullet(x0, h)),
        "coordinate matrix": candidate_differential_q2(x0),
    }
    regions = {"all": None, "first": region_first, "straddle": region_straddle}
    for name, L in candidates.items():
        for tag, region in regions.items():
            rep = differentiability_probe(q2, x0, L, args.radii, args.samples, args.seed, region, tag)
            print(f"# candidate: {name}; verdict: {rep.verdict.value}; samples per shell: {rep.counts}")
            print(rep.to_table())


if __name__ == "__main__":
    main()
