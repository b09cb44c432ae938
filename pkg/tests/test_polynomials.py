from fractions import Fraction

import pytest

from umbral.polynomials import Polynomial, binomial_poly, falling_factorial_poly


def test_construction_trims_trailing_zeros():
    p = Polynomial((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert Polynomial(()).degree == -1
    assert Polynomial((0, 0)).is_zero()


def test_ring_arithmetic():
    x = Polynomial.x()
    p = (x + 1) * (x - 1)
    assert p == Polynomial((-1, 0, 1))
    assert p + 1 == x * x
    assert (x + 1) ** 3 == Polynomial((1, 3, 3, 1))
    assert -(x - 2) == 2 - x
    assert (2 * x) / 4 == Polynomial((0, Fraction(1, 2)))


def test_scalar_equality_and_eval():
    assert Polynomial((5,)) == 5
    assert Polynomial((0, 1)) != 1
    p = Polynomial((-1, 0, 4))  # 4x^2 - 1
    assert p(Fraction(1, 2)) == 0
    assert p(2) == 15


def test_derivative():
    p = Polynomial((7, 0, 0, 1))  # x^3 + 7
    assert p.derivative() == Polynomial((0, 0, 3))
    assert Polynomial((3,)).derivative().is_zero()


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        Polynomial.x() ** -1


def test_binomial_poly_values():
    # binomial(x, 2) = x(x-1)/2
    b2 = binomial_poly(2)
    assert b2 == Polynomial((0, Fraction(-1, 2), Fraction(1, 2)))
    for v in range(6):
        assert b2(v) == v * (v - 1) // 2
    assert binomial_poly(0) == 1
    assert falling_factorial_poly(3)(5) == 5 * 4 * 3


def test_pretty():
    assert Polynomial((-1, 0, 4)).pretty() == "4x^2 - 1"
    assert Polynomial((0, Fraction(7, 4))).pretty() == "(7/4)x"
    assert Polynomial(()).pretty() == "0"
    assert Polynomial((0, -1)).pretty() == "-x"
