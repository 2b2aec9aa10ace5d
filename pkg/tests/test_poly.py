import pytest
from hypothesis import given, strategies as st

from cmc.poly import IntPoly, ONE, SymPoly, X, ZERO, sym_substitute

ints = st.integers(-50, 50)
polys = st.lists(ints, max_size=6).map(IntPoly)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@given(polys, polys, ints)
def test_evaluation_homomorphism(a, b, x):
    assert (a + b)(x) == a(x) + b(x)
    assert (a * b)(x) == a(x) * b(x)


@given(polys, st.integers(0, 4))
def test_power(a, e):
    expected = ONE
    for _ in range(e):
        expected = expected * a
    assert a ** e == expected


def test_normalisation_and_degree():
    assert IntPoly([1, 2, 0, 0]) == IntPoly([1, 2])
    assert ZERO.degree == -1
    assert IntPoly.from_high([1, 0, -1]).coeffs == (-1, 0, 1)
    assert (X * X - ONE).high_to_low() == [1, 0, -1]
    assert IntPoly.from_high([1, 0, -4, 0, 3, 0]).leading == 1


def test_render():
    assert str(IntPoly.from_high([1, 0, -4, 0, 3, 0])) == "x^5 - 4x^3 + 3x"
    assert str(IntPoly.from_high([-1, 0, 2])) == "-x^2 + 2"
    assert str(ZERO) == "0"


def test_shift_and_scale():
    p = IntPoly.from_high([1, 2])
    assert p.shift(2) == p * X * X
    assert p.scale(3) == p + p + p


@given(polys, polys, polys, polys)
def test_sym_substitution_is_a_homomorphism(a, b, q, r):
    s1 = SymPoly.from_intpoly(a, 1, [1], [0])
    s2 = SymPoly.from_intpoly(b, 1, [0], [2])
    lhs = sym_substitute(s1 * s2 + s1, [q], [r])
    rhs = a * q * b * r * r + a * q
    assert lhs == rhs


def test_sym_collapse_and_coefficient():
    s = SymPoly(2, {(1, 1, 0, 0, 1): 2, (1, 0, 1, 1, 0): 3})
    c = s.collapse()
    assert c.k == 1
    assert c.coefficient([1], [1]) == IntPoly([0, 5])


def test_sym_arity_mismatch():
    with pytest.raises(ValueError):
        SymPoly.zero(1) + SymPoly.zero(2)
    with pytest.raises(ValueError):
        SymPoly(1, {(0, 1): 1})
