"""Text rendering of completed elements and A4 elements."""

from __future__ import annotations

import math
import re

from .a4 import A4Element
from .core import GElement, Sign, to_canonical
from .errors import ParseError

SIG_DIGITS = 12


def fmt_real(x: float) -> str:
    """Format with 12 significant digits; ``-0`` prints as ``0``."""
    s = f"{x:.{SIG_DIGITS}g}"
    return "0" if s in ("-0", "0") else s


def round_real(x: float) -> float:
    """Round to 12 significant digits, for stable JSON output."""
    if x == 0 or not math.isfinite(x):
        return 0.0 if x == 0 else x
    return float(fmt_real(x))


def render(x: GElement) -> str:
    sign, a = to_canonical(x)
    if sign.kind is Sign.POINT:
        return fmt_real(a)
    body = f"[{fmt_real(a.lo)},{fmt_real(a.hi)}]"
    return body if sign.kind is Sign.POSITIVE else "dual" + body


def gelement_to_json(x: GElement) -> dict:
    """``{"lo", "hi"}`` for positive classes and points, ``{"dual": {...}}`` for negative ones."""
    sign, a = to_canonical(x)
    if sign.kind is Sign.NEGATIVE:
        return {"dual": {"lo": round_real(a.lo), "hi": round_real(a.hi)}}
    return {"lo": round_real(x.p), "hi": round_real(x.q)}


def render_a4(x: A4Element) -> str:
    return "(" + ", ".join(fmt_real(v) for v in x) + ")"


_NUM = r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_A4_RE = re.compile(rf"\s*\(\s*({_NUM})\s*,\s*({_NUM})\s*,\s*({_NUM})\s*,\s*({_NUM})\s*\)\s*$")


def parse_a4(s: str) -> A4Element:
    m = _A4_RE.match(s)
    if not m:
        raise ParseError("expected '(x1, x2, x3, x4)'", 0)
    return A4Element(*(float(g) for g in m.groups()))
