"""Inverses, exact division and Euclidean division of completed intervals.

All quotients are taken through A4: a divisor is invertible when its canonical
image has nonzero discriminant, which for a proper interval means it does not
contain 0 in its interior or at an endpoint.  Divisors straddling zero are
handled by solving the 2x2 system of the straddle-by-straddle product directly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .a4 import A4Element, a4_inverse, a4_is_invertible, a4_mul
from .core import GElement, g_add, g_sub
from .embed import bullet, phi_bar, reduce_mod_R
from .errors import (
    CenteredDivisor,
    ConditionFailed,
    DividendNotPositive,
    DivisionByZeroPoint,
    DivisorNotPositive,
    PointDivisorDegenerate,
    RatioConditionFailed,
    Unsupported,
)

DEGENERACY_TOL = 1e-12
RECONSTRUCTION_RTOL = 1e-9


class DivisionKind(enum.Enum):
    EXACT_INVERTIBLE = "exact-invertible"
    EXACT_STRADDLE = "exact-straddle"
    EUCLIDEAN = "euclidean"
    EUCLIDEAN_STRADDLE = "euclidean-straddle"


@dataclass(frozen=True)
class DivisionResult:
    quotient: GElement
    remainder: GElement
    kind: DivisionKind

    @property
    def exact(self) -> bool:
        return self.kind in (DivisionKind.EXACT_INVERTIBLE, DivisionKind.EXACT_STRADDLE)


def reconstruct(divisor: GElement, result: DivisionResult) -> GElement:
    """``divisor . quotient + remainder``; equals the dividend for a valid result."""
    return g_add(bullet(divisor, result.quotient), result.remainder)


def close(a: GElement, b: GElement, rtol: float = RECONSTRUCTION_RTOL) -> bool:
    scale = max(1.0, abs(a.p), abs(a.q), abs(b.p), abs(b.q))
    return abs(a.p - b.p) <= rtol * scale and abs(a.q - b.q) <= rtol * scale


# --- inverses -------------------------------------------------------------

def inverse_rep(x: GElement, tol: float = 0.0) -> A4Element:
    """A4 inverse of the canonical image of x."""
    return a4_inverse(phi_bar(x), tol)


def g_inverse(x: GElement, tol: float = 0.0) -> GElement:
    """Class of the A4 inverse; ``(p, q) -> (1/p, 1/q)`` when p, q share a strict sign.

    Note that ``bullet(x, g_inverse(x))`` is not the point 1 unless x is a point:
    the inverse class is negative and its canonical image differs from
    ``inverse_rep(x)``.  The identity that does hold is
    ``reduce_mod_R(phi_bar(x) * inverse_rep(x)) == 1``.
    """
    return reduce_mod_R(inverse_rep(x, tol))


# --- exact division -------------------------------------------------------

def _in_positive_cone(x: GElement) -> bool:
    return 0 <= x.p <= x.q


def invertible_condition_holds(y: GElement, x: GElement) -> bool:
    """Existence condition for a proper quotient: ``y2/y1 >= x2/x1``."""
    return y.q * x.p >= x.q * y.p


def divide_invertible(y: GElement, x: GElement, strict: bool = False) -> GElement:
    """Quotient ``(y1/x1, y2/x2)`` of nonnegative y by positive x.

    The formula is total on its domain; the result is a proper class exactly
    when :func:`invertible_condition_holds`.  ``strict=True`` raises instead.
    """
    if not (0 < x.p <= x.q):
        raise DivisorNotPositive(f"divisor {tuple(x)} is not a positive interval with x1 > 0")
    if not _in_positive_cone(y):
        raise DividendNotPositive(f"dividend {tuple(y)} is not a positive interval with y1 >= 0")
    if strict and not invertible_condition_holds(y, x):
        raise ConditionFailed("y2/y1 < x2/x1: no proper exact quotient")
    return GElement(y.p / x.p, y.q / x.q)


def _straddle_halves(x: GElement, name: str) -> tuple[float, float]:
    if not (x.p < 0 < x.q):
        raise ConditionFailed(f"{name} {tuple(x)} is not a positive class straddling 0")
    return -x.p, x.q


def _solve_straddle(x1: float, x2: float, u: float, v: float) -> tuple[float, float]:
    # [-x1, x2] . [-z3, z2] = [-(x1 z2 + x2 z3), x2 z2 + x1 z3]
    d = x1 * x1 - x2 * x2
    return (x1 * u - x2 * v) / d, (x1 * v - x2 * u) / d


def divide_straddle(y: GElement, x: GElement, tol: float = DEGENERACY_TOL) -> GElement:
    x1, x2 = _straddle_halves(x, "divisor")
    y1, y2 = _straddle_halves(y, "dividend")
    if abs(x1 - x2) <= tol:
        raise CenteredDivisor("divisor is centered at 0")
    z2, z3 = _solve_straddle(x1, x2, y1, y2)
    if z2 < 0 or z3 < 0:
        raise RatioConditionFailed(f"no straddling quotient (z2={z2:g}, z3={z3:g})")
    return GElement(-z3, z2)


# --- Euclidean division ---------------------------------------------------

def euclid_div(y: GElement, x: GElement, tol: float = DEGENERACY_TOL) -> DivisionResult:
    """Point quotient and point remainder of minimal center, for nonnegative x, y."""
    if not _in_positive_cone(x):
        raise DivisorNotPositive(f"divisor {tuple(x)} is not a nonnegative interval")
    if not _in_positive_cone(y):
        raise DividendNotPositive(f"dividend {tuple(y)} is not a nonnegative interval")
    x1, x2, y1, y2 = x.p, x.q, y.p, y.q
    if abs(x2 - x1) <= tol:
        raise PointDivisorDegenerate("divisor is a point; divide exactly instead")
    if not x1 * y2 < y1 * x2:
        raise ConditionFailed("x1/x2 >= y1/y2: exact division applies")
    z = (y2 - y1) / (x2 - x1)
    r = (x2 * y1 - x1 * y2) / (x2 - x1)
    return DivisionResult(GElement.point(z), GElement.point(r), DivisionKind.EUCLIDEAN)


def euclid_div_straddle(y: GElement, x: GElement, tol: float = DEGENERACY_TOL) -> DivisionResult:
    """Straddling quotient and straddling remainder of minimal length.

    With x = [-x1, x2] (x1 > x2) the attainable products ``x . z`` are the
    intervals [-u, v] with v/u in [x2/x1, x1/x2].  The remainder y - x.z has
    length y1 + y2 - (u + v), so the optimum saturates the dividend on the
    side that leaves the cone and sits on the cone boundary on the other.
    """
    x1, x2 = _straddle_halves(x, "divisor")
    y1, y2 = _straddle_halves(y, "dividend")
    if not x1 > x2 + tol:
        raise ConditionFailed("requires x1 > x2 for the divisor [-x1, x2]")
    if y1 * x2 > x1 * y2:
        u, v = y2 * x1 / x2, y2          # y1/y2 > x1/x2
    elif y2 * x2 > x1 * y1:
        u, v = y1, y1 * x1 / x2          # y2/y1 > x1/x2
    else:
        raise ConditionFailed("dividend ratio inside the divisor cone: exact division applies")
    z2, z3 = _solve_straddle(x1, x2, u, v)
    z2, z3 = max(z2, 0.0), max(z3, 0.0)  # exact zeros on the boundary, up to rounding
    quotient = GElement(-z3, z2)
    remainder = g_sub(y, bullet(x, quotient))
    return DivisionResult(quotient, remainder, DivisionKind.EUCLIDEAN_STRADDLE)


# --- dispatch -------------------------------------------------------------

def div_auto(y: GElement, x: GElement, inv_tol: float = 0.0) -> DivisionResult:
    zero = GElement.zero()
    if x.p == x.q == 0:
        raise DivisionByZeroPoint("division by the zero point")
    px = phi_bar(x)
    if a4_is_invertible(px, inv_tol):
        if _in_positive_cone(x) and _in_positive_cone(y):
            if invertible_condition_holds(y, x):
                return DivisionResult(divide_invertible(y, x), zero, DivisionKind.EXACT_INVERTIBLE)
            return euclid_div(y, x)
        q = reduce_mod_R(a4_mul(phi_bar(y), a4_inverse(px, inv_tol)))
        if close(bullet(x, q), y):
            return DivisionResult(q, zero, DivisionKind.EXACT_INVERTIBLE)
        raise Unsupported("A4 quotient does not reconstruct the dividend")
    if x.p < 0 < x.q and y.p < 0 < y.q:
        try:
            return DivisionResult(divide_straddle(y, x), zero, DivisionKind.EXACT_STRADDLE)
        except CenteredDivisor as exc:
            raise Unsupported(str(exc)) from exc
        except RatioConditionFailed:
            pass
        try:
            return euclid_div_straddle(y, x)
        except ConditionFailed as exc:
            raise Unsupported(str(exc)) from exc
    raise Unsupported(f"no division case for dividend {tuple(y)} and divisor {tuple(x)}")


def div_exact(y: GElement, x: GElement, inv_tol: float = 0.0) -> DivisionResult:
    """Exact division only; Euclidean fallbacks raise ConditionFailed."""
    if x.p < 0 < x.q:
        return DivisionResult(divide_straddle(y, x), GElement.zero(), DivisionKind.EXACT_STRADDLE)
    q = divide_invertible(y, x, strict=True)
    return DivisionResult(q, GElement.zero(), DivisionKind.EXACT_INVERTIBLE)


def div_euclid(y: GElement, x: GElement) -> DivisionResult:
    if x.p < 0 < x.q:
        return euclid_div_straddle(y, x)
    return euclid_div(y, x)

