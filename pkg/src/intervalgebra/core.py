"""Classical intervals and the completed space of generalized intervals.

A completed element is stored in the chart where the space is literally R^2:
the pair (p, q).  ``p < q`` is the positive class ``([p, q], 0)``, ``p > q`` is
the negative class ``(0, [-p, -q])`` and ``p == q`` is the real point ``p``.
Addition, scaling and subtraction are componentwise in this chart; the three
canonical forms are a derived view (see :func:`to_canonical`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .errors import MalformedInterval

Real = Union[int, float]


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval ``[lo, hi]`` with ``lo <= hi``."""

    lo: Real
    hi: Real

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise MalformedInterval(f"left endpoint {self.lo} exceeds right endpoint {self.hi}")

    @property
    def length(self) -> float:
        return self.hi - self.lo

    @property
    def center(self) -> float:
        return (self.hi + self.lo) / 2

    def __add__(self, other: Interval) -> Interval:
        return interval_add(self, other)

    def __sub__(self, other: Interval) -> Interval:
        return interval_sub(self, other)

    def contains(self, other: Interval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


def interval_new(lo: Real, hi: Real) -> Interval:
    return Interval(lo, hi)


def interval_add(x: Interval, y: Interval) -> Interval:
    return Interval(x.lo + y.lo, x.hi + y.hi)


def interval_sub(x: Interval, y: Interval) -> Interval:
    return Interval(x.lo - y.hi, x.hi - y.lo)


def interval_mul_classical(x: Interval, y: Interval) -> Interval:
    products = (x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi)
    return Interval(min(products), max(products))


class Sign(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    POINT = "point"


@dataclass(frozen=True, slots=True)
class SignClass:
    kind: Sign
    value: float | None = None  # set only for points

    @property
    def is_positive(self) -> bool:
        return self.kind is Sign.POSITIVE

    @property
    def is_negative(self) -> bool:
        return self.kind is Sign.NEGATIVE

    @property
    def is_point(self) -> bool:
        return self.kind is Sign.POINT


class Order(enum.Enum):
    GREATER_EQ = "greater-eq"
    LESS_EQ = "less-eq"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True, slots=True)
class GElement:
    """Element of the completed space, in (p, q) coordinates."""

    p: Real
    q: Real

    @classmethod
    def point(cls, value: Real) -> GElement:
        return cls(value, value)

    @classmethod
    def zero(cls) -> GElement:
        return cls(0.0, 0.0)

    def __add__(self, other: GElement) -> GElement:
        return g_add(self, other)

    def __sub__(self, other: GElement) -> GElement:
        return g_sub(self, other)

    def __neg__(self) -> GElement:
        return g_neg(self)

    def __rmul__(self, alpha: Real) -> GElement:
        if isinstance(alpha, GElement):
            return NotImplemented
        return g_scale(alpha, self)

    def __iter__(self):
        yield self.p
        yield self.q

    @property
    def sign(self) -> SignClass:
        return g_sign(self)

    @property
    def length(self) -> float:
        return g_length(self)

    @property
    def center(self) -> float:
        return g_center(self)

    def norm(self) -> float:
        return g_norm(self)


# Basis vectors: X1 = ([0, 1], 0) and X2 = ([1, 1], 0), the real point 1.
X1 = GElement(0.0, 1.0)
X2 = GElement(1.0, 1.0)


def g_from_proper(a: Interval) -> GElement:
    """The positive class ``(A, 0)``."""
    return GElement(a.lo, a.hi)


def g_from_negative(a: Interval) -> GElement:
    """The negative class ``(0, A)``."""
    return GElement(-a.lo, -a.hi)


def g_from_pair(x: Interval, y: Interval) -> GElement:
    """Class of the formal difference ``(x, y)``, i.e. x minus y in the group completion."""
    return GElement(x.lo - y.lo, x.hi - y.hi)


def g_add(x: GElement, y: GElement) -> GElement:
    return GElement(x.p + y.p, x.q + y.q)


def g_neg(x: GElement) -> GElement:
    return GElement(-x.p, -x.q)


def g_sub(x: GElement, y: GElement) -> GElement:
    return GElement(x.p - y.p, x.q - y.q)


def g_scale(alpha: Real, x: GElement) -> GElement:
    return GElement(alpha * x.p, alpha * x.q)


def g_length(x: GElement) -> float:
    return abs(x.q - x.p)


def g_center(x: GElement) -> float:
    # c(A) for positive classes and -c(A) for negative ones; both are (p+q)/2.
    return (x.p + x.q) / 2


def g_norm(x: GElement) -> float:
    return abs(x.q - x.p) + abs(x.p + x.q) / 2


def g_sign(x: GElement, tol: float = 0.0) -> SignClass:
    d = x.q - x.p
    if d > tol:
        return SignClass(Sign.POSITIVE)
    if d < -tol:
        return SignClass(Sign.NEGATIVE)
    return SignClass(Sign.POINT, x.p if x.p == x.q else (x.p + x.q) / 2)


def g_cmp(x: GElement, y: GElement, tol: float = 0.0) -> Order:
    s = g_sign(g_sub(x, y), tol)
    if s.kind is Sign.POSITIVE:
        return Order.GREATER_EQ
    if s.kind is Sign.NEGATIVE:
        return Order.LESS_EQ
    return Order.EQUAL if s.value == 0 else Order.INCOMPARABLE


def g_dual(x: GElement) -> GElement:
    return GElement(x.q, x.p)


def basis_decompose(x: GElement) -> tuple[float, float]:
    """Coordinates ``(u, v)`` with ``x = u*X1 + v*X2``."""
    return x.q - x.p, x.p


def basis_reconstruct(u: Real, v: Real) -> GElement:
    return g_add(g_scale(u, X1), g_scale(v, X2))


def to_canonical(x: GElement, tol: float = 0.0) -> tuple[SignClass, Interval | float]:
    """Return the sign class and the interval A (or the real) of the canonical form."""
    s = g_sign(x, tol)
    if s.kind is Sign.POSITIVE:
        return s, Interval(x.p, x.q)
    if s.kind is Sign.NEGATIVE:
        return s, Interval(-x.p, -x.q)
    return s, s.value


def canonical_interval(x: GElement, tol: float = 0.0) -> Interval:
    """The interval A underlying x, ignoring the sign; a point a gives ``[a, a]``."""
    _, a = to_canonical(x, tol)
    if isinstance(a, Interval):
        return a
    return Interval(a, a)
