"""Embedding of the completed interval space into A4 and the induced product.

``phi_bar`` sends a completed element to a canonical representative in A4;
``reduce_mod_R`` projects any A4 element back by collapsing the relation
``(x1, x2, x3, x4) ~ (x1 + t, x2 + s, x3 + t, x4 + s)``.
"""

from __future__ import annotations

from .a4 import A4Element, a4_mul
from .core import GElement, Interval, Sign, g_sign


def phi(x: Interval) -> A4Element:
    a, b = x.lo, x.hi
    if a >= 0:
        return A4Element(a, b, 0, 0)
    if b >= 0:
        return A4Element(0, b, -a, 0)
    return A4Element(0, 0, -a, -b)


def phi_bar(x: GElement) -> A4Element:
    s = g_sign(x)
    if s.kind is Sign.POSITIVE:
        return phi(Interval(x.p, x.q))
    if s.kind is Sign.NEGATIVE:
        return -phi(Interval(-x.p, -x.q))
    return phi(Interval(x.p, x.p))


def reduce_mod_R(x: A4Element) -> GElement:
    return GElement(x.x1 - x.x3, x.x2 - x.x4)


def bullet(x: GElement, y: GElement) -> GElement:
    """Product of completed elements through their canonical A4 images.

    The A4 product does not descend to classes of the relation, so the result
    depends on using ``phi_bar`` representatives; in particular it is not
    distributive over addition.
    """
    return reduce_mod_R(a4_mul(phi_bar(x), phi_bar(y)))


def g_pow(x: GElement, n: int) -> GElement:
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    acc = GElement.point(1.0)
    for _ in range(n):
        acc = bullet(x, acc)
    return acc


def straddles(x: Interval) -> bool:
    return x.lo < 0 < x.hi


def mul_envelope(x: Interval, y: Interval) -> Interval:
    """Interval image of the A4 product; exact unless both factors straddle zero."""
    if straddles(x) and straddles(y):
        x1, x2, y1, y2 = x.lo, x.hi, y.lo, y.hi
        return Interval(x1 * y2 + x2 * y1, x2 * y2 + x1 * y1)
    z = bullet(GElement(x.lo, x.hi), GElement(y.lo, y.hi))
    return Interval(z.p, z.q)

