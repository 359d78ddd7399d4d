"""The 4-dimensional commutative associative algebra A4.

Basis e1..e4 with unit e1 + e2.  A4 splits as the direct sum of the ideals
I1 = span{e1, e4} and I2 = span{e2, e3}; each ideal is a copy of the split-complex
numbers (e4*e4 = e1 inside I1, e3*e3 = e2 inside I2).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .core import Real
from .errors import BadShape, NotInvertible


@dataclass(frozen=True, slots=True)
class A4Element:
    x1: Real
    x2: Real
    x3: Real
    x4: Real

    def __iter__(self):
        yield self.x1
        yield self.x2
        yield self.x3
        yield self.x4

    def __add__(self, other: A4Element) -> A4Element:
        return a4_add(self, other)

    def __sub__(self, other: A4Element) -> A4Element:
        return a4_add(self, a4_scale(-1, other))

    def __neg__(self) -> A4Element:
        return A4Element(-self.x1, -self.x2, -self.x3, -self.x4)

    def __mul__(self, other):
        if isinstance(other, A4Element):
            return a4_mul(self, other)
        return a4_scale(other, self)

    def __rmul__(self, alpha: Real) -> A4Element:
        return a4_scale(alpha, self)


E1 = A4Element(1, 0, 0, 0)
E2 = A4Element(0, 1, 0, 0)
E3 = A4Element(0, 0, 1, 0)
E4 = A4Element(0, 0, 0, 1)
BASIS = (E1, E2, E3, E4)
ZERO = A4Element(0, 0, 0, 0)

# Each of the two ideals is principal.
I1_GENERATOR = E4
I2_GENERATOR = E3


def a4_add(x: A4Element, y: A4Element) -> A4Element:
    return A4Element(x.x1 + y.x1, x.x2 + y.x2, x.x3 + y.x3, x.x4 + y.x4)


def a4_scale(alpha: Real, x: A4Element) -> A4Element:
    return A4Element(alpha * x.x1, alpha * x.x2, alpha * x.x3, alpha * x.x4)


def a4_mul(x: A4Element, y: A4Element) -> A4Element:
    return A4Element(
        x.x1 * y.x1 + x.x4 * y.x4,
        x.x2 * y.x2 + x.x3 * y.x3,
        x.x3 * y.x2 + x.x2 * y.x3,
        x.x4 * y.x1 + x.x1 * y.x4,
    )


def a4_unit() -> A4Element:
    return A4Element(1, 1, 0, 0)


def a4_discriminant(x: A4Element) -> float:
    return (x.x1 ** 2 - x.x4 ** 2) * (x.x2 ** 2 - x.x3 ** 2)


def a4_is_invertible(x: A4Element, tol: float = 0.0) -> bool:
    return abs(a4_discriminant(x)) > tol


def a4_inverse(x: A4Element, tol: float = 0.0) -> A4Element:
    """Multiplicative inverse.

    Within each ideal this is the split-complex inverse ``(a - b j) / (a^2 - b^2)``,
    so the e3 and e4 coordinates change sign.
    """
    if not a4_is_invertible(x, tol):
        raise NotInvertible(f"discriminant of {tuple(x)} vanishes")
    d14 = x.x1 ** 2 - x.x4 ** 2
    d23 = x.x2 ** 2 - x.x3 ** 2
    return A4Element(x.x1 / d14, x.x2 / d23, -x.x3 / d23, -x.x4 / d14)


class Ideal(enum.Enum):
    I1 = "I1"
    I2 = "I2"
    NEITHER = "neither"
    ZERO = "zero"


def ideal_member(x: A4Element) -> Ideal:
    in_i1 = x.x2 == 0 and x.x3 == 0
    in_i2 = x.x1 == 0 and x.x4 == 0
    if in_i1 and in_i2:
        return Ideal.ZERO
    if in_i1:
        return Ideal.I1
    if in_i2:
        return Ideal.I2
    return Ideal.NEITHER


# --- partial order on the canonical image shapes ---------------------------

class A4Order(enum.Enum):
    LESS_EQ = "less-eq"
    INCOMPARABLE = "incomparable"


# shape 1: (x1, x2, 0, 0); shape 2: (0, x2, x3, 0); shape 3: (0, 0, x3, x4)
_SHAPE_ZEROS = {1: (2, 3), 2: (0, 3), 3: (0, 1)}


def canonical_shapes(x: A4Element) -> tuple[int, ...]:
    """Shapes matched by x; more than one when a free coordinate is zero."""
    c = tuple(x)
    if any(v < 0 for v in c):
        return ()
    return tuple(s for s, zeros in _SHAPE_ZEROS.items() if all(c[i] == 0 for i in zeros))


def _rule(sx: int, sy: int, x: A4Element, y: A4Element) -> bool:
    if (sx, sy) == (1, 1):
        return y.x1 <= x.x1 and x.x2 <= y.x2
    if (sx, sy) == (1, 2):
        return x.x2 <= y.x2
    if (sx, sy) == (2, 2):
        return x.x3 <= y.x3 and x.x2 <= y.x2
    if (sx, sy) == (3, 2):
        return x.x3 <= y.x3
    if (sx, sy) == (3, 3):
        return x.x3 <= y.x3 and y.x4 <= x.x4
    return False  # shape pair with no rule


def a4_leq(x: A4Element, y: A4Element) -> A4Order:
    shapes_x, shapes_y = canonical_shapes(x), canonical_shapes(y)
    if not shapes_x:
        raise BadShape(f"{tuple(x)} is not a canonical image shape")
    if not shapes_y:
        raise BadShape(f"{tuple(y)} is not a canonical image shape")
    for sx, sy in itertools.product(shapes_x, shapes_y):
        if _rule(sx, sy, x, y):
            return A4Order.LESS_EQ
    return A4Order.INCOMPARABLE
