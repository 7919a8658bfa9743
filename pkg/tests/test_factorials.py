from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genstirling.errors import PartsMismatch
from genstirling.factorials import FactorialKind, binomial, falling, gen_factorial, multinomial, raising
from genstirling.polycore import A, B, ONE, X, MultiPoly


def test_numeric_values():
    assert raising(2, 1, 3) == 24
    assert isinstance(raising(2, 1, 3), int)
    assert raising(Fraction(2), Fraction(1), 3) == Fraction(24)
    assert falling(5, 1, 2) == 20
    assert falling(7, 3, 0) == 1
    assert raising(Fraction(1, 2), Fraction(1, 3), 2) == Fraction(1, 2) * Fraction(5, 6)


def test_polynomial_values():
    assert raising(X, A, 2) == X**2 + A * X
    assert falling(X, B, 2) == X**2 - B * X
    assert raising(B.scale(2), A, 0) == ONE
    # ints next to a polynomial are lifted
    assert raising(3, A, 2) == A.scale(3) + 9


def test_kind_accepts_strings():
    assert gen_factorial("falling", 5, 2, 2) == gen_factorial(FactorialKind.FALLING, 5, 2, 2) == 15


def test_rejects_non_integral_lift_and_negative_n():
    with pytest.raises(ValueError):
        raising(Fraction(1, 2), A, 2)
    with pytest.raises(ValueError):
        raising(2, 1, -1)


def test_binomial_and_multinomial():
    assert binomial(5, 2) == 10
    assert binomial(3, 4) == 0
    assert binomial(3, -1) == 0
    assert multinomial(4, (2, 2)) == 6
    assert multinomial(5, (1, 2, 2)) == 30
    assert multinomial(0, ()) == 1
    with pytest.raises(PartsMismatch):
        multinomial(4, (1, 2))


@settings(max_examples=200, deadline=None)
@given(st.integers(-6, 6), st.integers(-4, 4), st.integers(0, 6))
def test_falling_raising_duality(x, t, n):
    assert falling(x, t, n) == (-1) ** n * raising(-x, t, n)


@settings(max_examples=200, deadline=None)
@given(st.integers(-6, 6), st.integers(-4, 4), st.integers(0, 6))
def test_raising_recursion(x, t, n):
    assert raising(x, t, n + 1) == raising(x, t, n) * (x + n * t)
    assert falling(x, t, n + 1) == falling(x, t, n) * (x - n * t)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@settings(max_examples=300, deadline=None)
@given(rationals, rationals, st.integers(0, 20))
def test_recursion_over_rationals(x, t, n):
    assert raising(x, t, n + 1) == raising(x, t, n) * (x + n * t)
    assert falling(x, t, n + 1) == falling(x, t, n) * (x - n * t)
    assert falling(x, t, n) == (-1) ** n * raising(-x, t, n)


@pytest.mark.parametrize("kind", list(FactorialKind))
def test_zero_increment_is_a_power(kind):
    x = Fraction(-7, 3)
    for n in range(9):
        assert gen_factorial(kind, x, 0, n) == x**n
        assert gen_factorial(kind, X, 0, n) == X**n
        assert gen_factorial(kind, 4, 0, n) == 4**n


def test_polynomial_duality():
    for n in range(9):
        assert falling(X, A, n) == raising(X, -A, n)
        assert falling(X, B, n) == (-1) ** n * raising(-X, B, n)
        assert raising(A + B, MultiPoly.var("x"), n) == falling(A + B, -X, n)
