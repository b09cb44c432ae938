from fractions import Fraction
from random import Random

import pytest

from umbral.polynomials import Polynomial
from umbral.rationals import binomial
from umbral.symbolic import (
    UmbralSymbol,
    X,
    Y,
    abel,
    abel_expression,
    atom,
    constant,
    evaluate,
    formal_derivative,
)
from umbral.umbra import add, augmentation, dot_scalar, scalar_umbra, singleton, ubar
from umbral.verify import random_umbra

F = Fraction


# --- evaluation ------------------------------------------------------------


def test_evaluate_kills_high_singleton_powers():
    s = UmbralSymbol(singleton(4))
    expr = atom(X) ** 2 * atom(s) ** 3
    assert evaluate(expr) == constant(0)


def test_evaluate_binomial_expansion():
    s = UmbralSymbol(ubar(4))
    expr = (atom(X) + atom(s)) ** 2
    assert evaluate(expr).to_univariate() == Polynomial((2, 2, 1))


def test_evaluate_uncorrelated_versus_correlated():
    s1 = UmbralSymbol(singleton(3))
    s2 = UmbralSymbol(singleton(3))
    assert evaluate(atom(s1) * atom(s2)).constant_value() == 1
    assert evaluate(atom(s1) * atom(s1)).constant_value() == 0


def test_evaluate_exponent_over_order_raises():
    s = UmbralSymbol(singleton(2))
    with pytest.raises(ValueError):
        evaluate(atom(s) ** 3)


def test_evaluate_is_linear_over_coefficients():
    rng = Random(1)
    u = random_umbra(rng, 6)
    s = UmbralSymbol(u)
    expr = constant(3) * atom(s) ** 2 - atom(s) * F(1, 2) + 7
    got = evaluate(expr).constant_value()
    assert got == 3 * u.moment(2) - F(1, 2) * u.moment(1) + 7


# --- formal derivative -------------------------------------------------------


def test_derivative_power_rule():
    expr = atom(X) ** 3
    assert formal_derivative(expr, X) == constant(3) * atom(X) ** 2


def test_derivative_product_rule_two_atoms():
    g = UmbralSymbol(ubar(3))
    s = UmbralSymbol(ubar(3))
    expr = atom(g) * (atom(g) + atom(s))
    expected = constant(2) * atom(g) + atom(s)
    assert formal_derivative(expr, g) == expected


def test_derivative_of_constant_is_zero():
    assert formal_derivative(constant(5), X) == constant(0)
    expr = atom(Y) ** 2
    assert formal_derivative(expr, X) == constant(0)


# --- Abel polynomials -----------------------------------------------------------


def test_abel_augmentation_gives_monomials():
    for n in range(6):
        assert abel(n, X, augmentation(6)) == Polynomial((0,) * n + (1,))


def test_abel_scalar_values():
    assert abel(2, X, scalar_umbra(2, 4)) == Polynomial((0, 4, 1))  # x(x + 2a), a=2
    assert abel(3, X, scalar_umbra(1, 4)) == Polynomial((0, 9, 6, 1))  # x(x+3)^2


def test_abel_zero_is_one():
    assert abel(0, X, ubar(4)) == Polynomial((1,))


def test_abel_insufficient_order():
    with pytest.raises(ValueError):
        abel(5, X, ubar(3))


def test_abel_monic_of_degree_n():
    rng = Random(2)
    for _ in range(8):
        u = random_umbra(rng, 8)
        n = rng.randint(1, 8)
        p = abel(n, X, u)
        assert p.degree == n
        assert p.coeff(n) == 1


# --- the derivative rule for Abel polynomials --------------------------------------


def test_abel_derivative_rule():
    rng = Random(3)
    for _ in range(10):
        u = random_umbra(rng, 10)
        for n in range(1, 11):
            lhs = abel_expression(n, atom(X), u).formal_derivative(X).evaluate().to_univariate()
            fresh_copy = UmbralSymbol(u)
            rhs_expr = abel_expression(n - 1, atom(X) + atom(fresh_copy), u) * n
            assert lhs == rhs_expr.evaluate().to_univariate()


# --- the Abel identity ----------------------------------------------------------------


def abel_weight(g, u, k):
    if k == 0:
        return F(1)
    gs = atom(UmbralSymbol(g))
    shift = atom(UmbralSymbol(dot_scalar(-k, u)))
    return (gs * (gs + shift) ** (k - 1)).evaluate().constant_value()


def test_abel_identity_exact():
    rng = Random(4)
    for _ in range(10):
        order = 10
        a = random_umbra(rng, order)
        g = random_umbra(rng, order)
        d = random_umbra(rng, order)
        lhs_umbra = add(d, g)
        for n in range(order + 1):
            rhs = sum(
                binomial(n, k) * add(d, dot_scalar(k, a)).moment(n - k) * abel_weight(g, a, k)
                for k in range(n + 1)
            )
            assert lhs_umbra.moment(n) == rhs


def test_abel_identity_polynomial_form():
    # same expansion applied to q(delta + gamma) for monomials and a dense q
    rng = Random(5)
    order = 8
    a = random_umbra(rng, order)
    g = random_umbra(rng, order)
    d = random_umbra(rng, order)

    def subst(poly, arg):
        result = constant(0)
        p = constant(1)
        for c in poly.coeffs:
            result = result + p * c
            p = p * arg
        return result

    qs = [Polynomial((0,) * j + (1,)) for j in range(7)]
    qs.append(Polynomial((3, -1, 0, 2, F(1, 2), 0, 1)))
    for q in qs:
        lhs = subst(q, atom(UmbralSymbol(d)) + atom(UmbralSymbol(g))).evaluate().constant_value()
        rhs = F(0)
        deriv = q
        fact = 1
        for k in range(q.degree + 1):
            arg = atom(UmbralSymbol(d)) + atom(UmbralSymbol(dot_scalar(k, a)))
            rhs += subst(deriv, arg).evaluate().constant_value() * abel_weight(g, a, k) / fact
            deriv = deriv.derivative()
            fact *= k + 1
        assert lhs == rhs


# --- the binomial identity of Abel polynomials -------------------------------------------


def test_abel_binomial_identity_bivariate():
    rng = Random(6)
    for _ in range(6):
        u = random_umbra(rng, 8)
        for n in range(9):
            lhs = abel_expression(n, atom(X) + atom(Y), u).evaluate()
            rhs = constant(0)
            for k in range(n + 1):
                product = abel_expression(k, atom(X), u) * abel_expression(n - k, atom(Y), u)
                rhs = rhs + binomial(n, k) * product.evaluate()
            assert lhs == rhs
