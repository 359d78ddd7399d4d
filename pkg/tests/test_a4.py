import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from intervalgebra.a4 import (
    BASIS,
    E1,
    E2,
    E3,
    E4,
    I1_GENERATOR,
    I2_GENERATOR,
    A4Element,
    A4Order,
    Ideal,
    a4_add,
    a4_discriminant,
    a4_inverse,
    a4_is_invertible,
    a4_leq,
    a4_mul,
    a4_scale,
    a4_unit,
    canonical_shapes,
    ideal_member,
)
from intervalgebra.errors import BadShape, NotInvertible

ZERO = A4Element(0, 0, 0, 0)

# Multiplication table of the basis, row * column.
TABLE = {
    (1, 1): E1, (1, 2): ZERO, (1, 3): ZERO, (1, 4): E4,
    (2, 1): ZERO, (2, 2): E2, (2, 3): E3, (2, 4): ZERO,
    (3, 1): ZERO, (3, 2): E3, (3, 3): E2, (3, 4): ZERO,
    (4, 1): E4, (4, 2): ZERO, (4, 3): ZERO, (4, 4): E1,
}

small = st.integers(-50, 50).map(float)
elems = st.builds(A4Element, small, small, small, small)
reals = st.floats(-1e3, 1e3, allow_nan=False)
real_elems = st.builds(A4Element, reals, reals, reals, reals)


def mul_matrix(x: A4Element) -> np.ndarray:
    """Matrix of y -> x * y in the basis e1..e4."""
    return np.column_stack([list(a4_mul(x, e)) for e in BASIS])


def test_basis_table():
    for (i, j), expected in TABLE.items():
        assert a4_mul(BASIS[i - 1], BASIS[j - 1]) == expected


def test_add_scale_examples():
    assert a4_add(E1, E2) == A4Element(1, 1, 0, 0)
    assert a4_scale(2, A4Element(1, 2, 3, 4)) == A4Element(2, 4, 6, 8)
    assert a4_scale(0, A4Element(1, 2, 3, 4)) == ZERO


def test_mul_examples():
    assert a4_mul(E4, E4) == E1
    assert a4_mul(E1, E2) == ZERO
    assert a4_mul(A4Element(3, 4, 0, 0), A4Element(0, 1, 1, 0)) == A4Element(0, 4, 4, 0)


def test_unit():
    assert a4_unit() == A4Element(1, 1, 0, 0)
    assert a4_mul(a4_unit(), A4Element(1, 2, 3, 4)) == A4Element(1, 2, 3, 4)
    assert a4_mul(E3, a4_unit()) == E3


def test_discriminant_examples():
    assert a4_discriminant(A4Element(1, 2, 0, 0)) == 4
    assert a4_is_invertible(A4Element(1, 2, 0, 0))
    assert a4_discriminant(A4Element(0, 2, 1, 0)) == 0
    assert not a4_is_invertible(A4Element(0, 2, 1, 0))
    assert a4_discriminant(a4_unit()) == 1


def test_inverse_examples():
    assert a4_inverse(A4Element(1, 2, 0, 0)) == A4Element(1, 0.5, 0, 0)
    assert a4_inverse(a4_unit()) == a4_unit()
    with pytest.raises(NotInvertible):
        a4_inverse(A4Element(1, 0, 0, 1))
    with pytest.raises(NotInvertible):
        a4_inverse(A4Element(0, 2, 2, 0))


def test_inverse_tolerance():
    x = A4Element(1, 1, 0, 1 - 1e-9)
    assert a4_is_invertible(x)
    with pytest.raises(NotInvertible):
        a4_inverse(x, tol=1e-6)


def test_straddle_image_not_invertible():
    # x1 = x4 = 0 kills the first factor of the discriminant
    with pytest.raises(NotInvertible):
        a4_inverse(A4Element(0, 2, 1, 0))


def test_ideal_member_examples():
    assert ideal_member(E4) is Ideal.I1
    assert ideal_member(E3) is Ideal.I2
    assert ideal_member(a4_unit()) is Ideal.NEITHER
    assert ideal_member(ZERO) is Ideal.ZERO
    assert ideal_member(I1_GENERATOR) is Ideal.I1 and ideal_member(I2_GENERATOR) is Ideal.I2


def test_leq_examples():
    assert a4_leq(A4Element(1, 2, 0, 0), A4Element(0, 3, 1, 0)) is A4Order.LESS_EQ
    assert a4_leq(A4Element(0, 0, 2, 5), A4Element(0, 0, 3, 1)) is A4Order.LESS_EQ
    assert a4_leq(A4Element(0, 0, 1, 2), A4Element(1, 2, 0, 0)) is A4Order.INCOMPARABLE
    with pytest.raises(BadShape):
        a4_leq(A4Element(1, 2, 3, 0), a4_unit())
    with pytest.raises(BadShape):
        a4_leq(a4_unit(), A4Element(-1, 2, 0, 0))


def test_canonical_shapes_ambiguity():
    assert canonical_shapes(A4Element(0, 2, 0, 0)) == (1, 2)
    assert canonical_shapes(A4Element(0, 0, 3, 0)) == (2, 3)
    assert canonical_shapes(ZERO) == (1, 2, 3)
    assert canonical_shapes(A4Element(1, 0, 0, 1)) == ()


# --- properties -----------------------------------------------------------

@given(elems, elems, elems)
def test_associative_commutative_exact(x, y, z):
    # small integers: every product is exact
    assert a4_mul(a4_mul(x, y), z) == a4_mul(x, a4_mul(y, z))
    assert a4_mul(x, y) == a4_mul(y, x)


@given(elems, elems, elems)
def test_bilinear(x, y, z):
    assert a4_mul(x, a4_add(y, z)) == a4_add(a4_mul(x, y), a4_mul(x, z))


@given(real_elems)
def test_inverse_matches_linear_solve(x):
    assume(abs(a4_discriminant(x)) > 1e-6 * max(1.0, max(abs(v) for v in x)) ** 4)
    inv = a4_inverse(x)
    oracle = np.linalg.solve(mul_matrix(x), np.array([1.0, 1.0, 0.0, 0.0]))
    scale = np.max(np.abs(oracle)) + 1.0
    assert np.allclose(list(inv), oracle, rtol=1e-8, atol=1e-8 * scale)


@given(elems)
def test_inverse_exact_rational(x):
    assume(a4_discriminant(x) != 0)
    fx = [Fraction(int(v)) for v in x]
    d14, d23 = fx[0] ** 2 - fx[3] ** 2, fx[1] ** 2 - fx[2] ** 2
    inv = [fx[0] / d14, fx[1] / d23, -fx[2] / d23, -fx[3] / d14]
    x1, x2, x3, x4 = fx
    y1, y2, y3, y4 = inv
    prod = (x1 * y1 + x4 * y4, x2 * y2 + x3 * y3, x3 * y2 + x2 * y3, x4 * y1 + x1 * y4)
    assert prod == (1, 1, 0, 0)


@given(real_elems)
def test_inverse_involution(x):
    assume(abs(x.x1 ** 2 - x.x4 ** 2) > 1e-3 * (x.x1 ** 2 + x.x4 ** 2) + 1e-9)
    assume(abs(x.x2 ** 2 - x.x3 ** 2) > 1e-3 * (x.x2 ** 2 + x.x3 ** 2) + 1e-9)
    back = a4_inverse(a4_inverse(x))
    for a, b in zip(back, x):
        assert abs(a - b) <= 1e-9 * (1 + max(abs(v) for v in x))


@given(small, small, small, small)
def test_ideals_annihilate(a, b, c, d):
    assert a4_mul(A4Element(a, 0, 0, b), A4Element(0, c, d, 0)) == ZERO


def _grid_elements(shape: int):
    vals = [0, 0.5, 1, 2, 3]
    for u, v in itertools.product(vals, repeat=2):
        if shape == 1 and u <= v:
            yield A4Element(u, v, 0, 0)
        elif shape == 2:
            yield A4Element(0, u, v, 0)
        elif shape == 3 and u >= v:
            yield A4Element(0, 0, u, v)


@pytest.mark.parametrize("shape", [1, 2, 3])
def test_leq_reflexive_transitive(shape):
    elems_ = list(_grid_elements(shape))
    leq = {(i, j): a4_leq(a, b) is A4Order.LESS_EQ
           for i, a in enumerate(elems_) for j, b in enumerate(elems_)}
    for i in range(len(elems_)):
        assert leq[i, i]
    for i, j, k in itertools.product(range(len(elems_)), repeat=3):
        if leq[i, j] and leq[j, k]:
            assert leq[i, k]
