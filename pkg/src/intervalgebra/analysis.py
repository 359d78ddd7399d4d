"""Metric geometry and calculus probes on the completed space.

In the (l, c) chart the norm is ``|dl| + |dc|``, so norm balls are diamonds in
(l, c) and parallelograms in (p, q).  Sampling draws uniform points of the unit
diamond once per probe and rescales them, which keeps probes deterministic in
``seed`` and makes results at different radii comparable.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .core import X1, X2, GElement, Sign, canonical_interval, g_add, g_norm, g_scale, g_sign, g_sub
from .embed import bullet, g_pow
from .errors import ProbeFailure

GFunc = Callable[[GElement], GElement]


# --- linear maps ----------------------------------------------------------

@dataclass(frozen=True)
class LinearMap2:
    """2x2 real matrix acting on (p, q) coordinates."""

    matrix: tuple[tuple[float, float], tuple[float, float]]

    def __call__(self, h: GElement) -> GElement:
        (a, b), (c, d) = self.matrix
        return GElement(a * h.p + b * h.q, c * h.p + d * h.q)

    def as_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=float)


def candidate_differential_q2(x0: GElement) -> LinearMap2:
    """Matrix of ``h -> 2 x0 . h`` built from the images of the basis X1, X2."""
    l1 = g_scale(2, bullet(x0, X1))
    l2 = g_scale(2, bullet(x0, X2))
    # h = (dq - dp) X1 + dp X2
    col_p = g_sub(l2, l1)
    return LinearMap2(((col_p.p, l1.p), (col_p.q, l1.q)))


# --- balls ----------------------------------------------------------------

def ball_vertices(x0: GElement, eps: float) -> list[GElement]:
    """Vertices of the eps-ball around x0, in coordinates."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    offsets = [(-eps, -eps), (eps / 2, -eps / 2), (eps, eps), (-eps / 2, eps / 2)]
    return [GElement(x0.p + dp, x0.q + dq) for dp, dq in offsets]


def ball_contains(x0: GElement, eps: float, x: GElement) -> bool:
    return g_norm(g_sub(x, x0)) < eps


def _opposite(x0: GElement, x: GElement) -> bool:
    a, b = g_sign(x0).kind, g_sign(x).kind
    return {a, b} == {Sign.POSITIVE, Sign.NEGATIVE}


def unit_ball_offsets(samples: int, seed: int) -> np.ndarray:
    """Offsets (dp, dq) of norm < 1: uniform in the diamond plus the four vertex directions."""
    rng = np.random.default_rng(seed)
    uv = rng.uniform(-1.0, 1.0, size=(samples, 2))
    s = (uv[:, 0] + uv[:, 1]) / 2   # center change
    t = (uv[:, 0] - uv[:, 1]) / 2   # length change, |s| + |t| < 1
    pts = np.column_stack([s - t / 2, s + t / 2])
    shrink = 1 - 2.0 ** -20
    verts = shrink * np.array([[-1.0, -1.0], [0.5, -0.5], [1.0, 1.0], [-0.5, 0.5]])
    return np.vstack([pts, verts])


# --- q2 and polynomials ---------------------------------------------------

def q2(x: GElement) -> GElement:
    """Range of the real square over the canonical interval (sign ignored)."""
    iv = canonical_interval(x)
    a, b = iv.lo, iv.hi
    if a >= 0:
        return GElement(a * a, b * b)
    if b <= 0:
        return GElement(b * b, a * a)
    return GElement(0.0, max(a * a, b * b))


def q2_vs_square(x: GElement) -> tuple[GElement, GElement, bool]:
    """``(q2(x), x . x, q2 contained in x . x)``."""
    q, sq = q2(x), bullet(x, x)
    return q, sq, sq.p <= q.p and q.q <= sq.q


def poly_eval(coeffs: Sequence[float], x: GElement) -> GElement:
    acc = GElement.zero()
    for i, a in enumerate(coeffs):
        acc = g_add(acc, g_scale(a, g_pow(x, i)))
    return acc


# --- continuity -----------------------------------------------------------

def _images(f: GFunc, x0: GElement, offsets: np.ndarray, radius: float):
    fx0 = f(x0)
    for dp, dq in offsets.tolist():
        x = GElement(x0.p + radius * dp, x0.q + radius * dq)
        if _opposite(x0, x):
            continue
        yield x, g_norm(g_sub(x, x0)), g_norm(g_sub(f(x), fx0))


def eta_accepted(f: GFunc, x0: GElement, eta: float, eps: float, offsets: np.ndarray) -> bool:
    """True if every sample with ``||X - x0|| < eta`` has ``||f(X) - f(x0)|| < eps``."""
    return all(dy < eps for _, dx, dy in _images(f, x0, offsets, eta) if dx < eta)


def continuity_probe(f: GFunc, x0: GElement, eps: float, samples: int = 10_000,
                     seed: int = 0, bisections: int = 30) -> float:
    """Largest tested eta certifying the eps-continuity bound on the samples."""
    if eps <= 0 or samples < 1:
        raise ValueError("need eps > 0 and samples >= 1")
    offsets = unit_ball_offsets(samples, seed)
    if eta_accepted(f, x0, eps, eps, offsets):
        return eps
    hi = eps
    for k in range(1, 21):
        lo = eps * 2.0 ** -k
        if eta_accepted(f, x0, lo, eps, offsets):
            break
        hi = lo
    else:
        raise ProbeFailure(f"bound fails even at eta = eps * 2^-20 = {lo:g}")
    for _ in range(bisections):
        mid = (lo + hi) / 2
        if eta_accepted(f, x0, mid, eps, offsets):
            lo = mid
        else:
            hi = mid
    return lo


# --- differentiability ----------------------------------------------------

class Verdict(enum.Enum):
    VANISHES_LINEARLY = "vanishes-linearly"
    BOUNDED_AWAY = "bounded-away"
    DIVERGES = "diverges"


@dataclass(frozen=True)
class ProbeConfig:
    diverge_growth: float = 10.0     # ratio growth per decade of radius
    fit_residual: float = 0.1        # relative residual of ratio ~ C r
    zero_tol: float = 1e-9           # ratios below this count as exactly 0


@dataclass
class ProbeReport:
    radii: list[float]
    ratios: list[float]
    verdict: Verdict
    region: str = "all"
    counts: list[int] = field(default_factory=list)

    def ratio_at(self, radius: float) -> float:
        i = min(range(len(self.radii)), key=lambda k: abs(math.log(self.radii[k] / radius)))
        return self.ratios[i]

    def to_table(self) -> str:
        lines = ["radius\tratio\tregion"]
        lines += [f"{r:.6g}\t{q:.6g}\t{self.region}" for r, q in zip(self.radii, self.ratios)]
        return "\n".join(lines) + "\n"


def classify(radii: Sequence[float], ratios: Sequence[float], cfg: ProbeConfig = ProbeConfig()) -> Verdict:
    r = np.asarray(radii, dtype=float)
    q = np.asarray(ratios, dtype=float)
    if np.all(q <= cfg.zero_tol):
        return Verdict.VANISHES_LINEARLY
    decades = math.log10(r[0] / r[-1])
    if decades > 0:
        if q[0] <= cfg.zero_tol:
            return Verdict.DIVERGES
        # slack so that exactly 10x per decade is not lost to rounding
        if (q[-1] / q[0]) ** (1 / decades) >= cfg.diverge_growth * (1 - 1e-9):
            return Verdict.DIVERGES
    c = float(np.dot(q, r) / np.dot(r, r))
    if np.linalg.norm(q - c * r) < cfg.fit_residual * np.linalg.norm(q):
        return Verdict.VANISHES_LINEARLY
    return Verdict.BOUNDED_AWAY


Region = Callable[[GElement, GElement], bool]


def differentiability_probe(f: GFunc, x0: GElement, L: Callable[[GElement], GElement],
                            radii: Sequence[float], samples: int = 10_000, seed: int = 0,
                            region: Region | None = None, region_tag: str = "all",
                            cfg: ProbeConfig = ProbeConfig()) -> ProbeReport:
    """Sup of ``||f(X) - f(x0) - L(X - x0)|| / ||X - x0||`` over shells ``[r/2, r]``."""
    radii = [float(r) for r in radii]
    if any(r <= 0 for r in radii) or any(a <= b for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must be positive and strictly decreasing")
    offsets = unit_ball_offsets(samples, seed)
    fx0 = f(x0)
    ratios, counts = [], []
    for r in radii:
        best, n = 0.0, 0
        for dp, dq in offsets.tolist():
            x = GElement(x0.p + r * dp, x0.q + r * dq)
            h = g_sub(x, x0)
            nh = g_norm(h)
            if not (r / 2 <= nh <= r) or _opposite(x0, x):
                continue
            if region is not None and not region(x0, x):
                continue
            n += 1
            resid = g_norm(g_sub(g_sub(f(x), fx0), L(h)))
            best = max(best, resid / nh)
        if n == 0:
            raise ProbeFailure(f"no samples in region {region_tag!r} at radius {r:g}")
        ratios.append(best)
        counts.append(n)
    return ProbeReport(radii, ratios, classify(radii, ratios, cfg), region_tag, counts)


# Regions of the non-differentiability argument around x0 = [a, b], 0 < a < b.

def region_first(x0: GElement, x: GElement) -> bool:
    """``0 < x - a <= y - b``."""
    dp, dq = x.p - x0.p, x.q - x0.q
    return 0 < dp <= dq


def region_straddle(x0: GElement, x: GElement) -> bool:
    """``0 < y - b < a - x``."""
    dp, dq = x.p - x0.p, x.q - x0.q
    return 0 < dq < -dp
