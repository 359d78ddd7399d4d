"""Generalized intervals: the completed space, the algebra A4, division and an interval simplex."""

from .a4 import A4Element, a4_add, a4_discriminant, a4_inverse, a4_is_invertible, a4_leq, a4_mul, a4_scale, a4_unit
from .core import (
    X1,
    X2,
    GElement,
    Interval,
    Order,
    Sign,
    SignClass,
    basis_decompose,
    basis_reconstruct,
    g_add,
    g_center,
    g_cmp,
    g_dual,
    g_from_negative,
    g_from_pair,
    g_from_proper,
    g_length,
    g_neg,
    g_norm,
    g_scale,
    g_sign,
    g_sub,
    interval_add,
    interval_mul_classical,
    interval_new,
    interval_sub,
    to_canonical,
)
from .division import DivisionKind, DivisionResult, div_auto, divide_invertible, divide_straddle, euclid_div, euclid_div_straddle, g_inverse
from .embed import bullet, g_pow, mul_envelope, phi, phi_bar, reduce_mod_R
from .expr import eval_expr, parse_gelement
from .text import render, render_a4

__version__ = "0.1.0"
