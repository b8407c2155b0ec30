"""Gegenbauer/adjacent construction and exact basis conversion.

The independent oracle for the recurrence is sympy's Jacobi polynomial
P_i^{(alpha,alpha)} with alpha = (n-3)/2, normalized at t = 1; expansion
coefficients are cross-checked against weighted integrals.
"""

import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from kkdesign.gegenbauer import (
    GegenbauerExpansion,
    JacobiParams,
    adjacent,
    expand,
    gegenbauer,
    gegenbauer_values,
    reconstruct,
)
from kkdesign.polynomials import ONE, T, Polynomial


def _sympy_normalized_jacobi(n: int, a: int, b: int, i: int) -> Polynomial:
    """Independent construction via sympy's dense jacobi_poly, normalized at t = 1.

    (sympy.jacobi itself returns non-polynomial closed forms for
    half-integer parameters, so the dense generator is the usable oracle.)
    """
    x = sympy.Symbol("x")
    alpha = sympy.Rational(n - 3, 2) + a
    beta = sympy.Rational(n - 3, 2) + b
    poly = sympy.jacobi_poly(i, alpha, beta, x, polys=True)
    at_one = poly.eval(1)
    coeffs = [Fraction(int(c.p), int(c.q)) / Fraction(int(at_one.p), int(at_one.q))
              for c in reversed(poly.all_coeffs())]
    return Polynomial(coeffs)


def test_initial_conditions():
    assert gegenbauer(5, 0) == ONE
    assert gegenbauer(5, 1) == T


def test_degree_two_values():
    # one recurrence step: (n-1) P_2 = n t^2 - 1
    assert gegenbauer(5, 2) == Polynomial([Fraction(-1, 4), 0, Fraction(5, 4)])
    assert gegenbauer(3, 2) == Polynomial([Fraction(-1, 2), 0, Fraction(3, 2)])


def test_against_sympy_oracle():
    for n in range(2, 9):
        for i in range(0, 9):
            assert gegenbauer(n, i) == _sympy_normalized_jacobi(n, 0, 0, i), (n, i)


def test_domain_errors():
    with pytest.raises(ValueError):
        gegenbauer(1, 2)
    with pytest.raises(ValueError):
        gegenbauer(3, -1)


def test_normalization_at_one():
    for n in range(2, 13):
        for i in range(0, 13):
            assert gegenbauer(n, i)(Fraction(1)) == 1


def test_parity():
    for n in range(2, 9):
        for i in range(0, 11):
            assert gegenbauer(n, i).parity() == i % 2


def test_orthogonality_numerical():
    # Gauss-Jacobi quadrature with weight (1-t^2)^((n-3)/2) as oracle
    from scipy.special import roots_jacobi

    for n in range(3, 9):
        alpha = (n - 3) / 2.0
        nodes, weights = roots_jacobi(40, alpha, alpha)
        values = gegenbauer_values(n, 8, nodes)
        norms = [float(np.sum(weights * values[i] * values[i])) for i in range(9)]
        for i in range(9):
            for j in range(i + 1, 9):
                inner = float(np.sum(weights * values[i] * values[j]))
                scale = (norms[i] * norms[j]) ** 0.5
                assert abs(inner) <= 1e-9 * scale, (n, i, j)


def test_adjacent_trivial_cases():
    assert adjacent(JacobiParams(3, 1, 1), 2) == Polynomial([Fraction(-1, 4), 0, Fraction(5, 4)])
    assert adjacent(JacobiParams(3, 0, 0), 1) == T
    assert adjacent(JacobiParams(3, 1, 0), 1)(Fraction(1)) == 1


def test_adjacent_identities():
    # (1,1) is the Gegenbauer polynomial two dimensions up; (0,0) is plain
    for n in range(2, 11):
        for i in range(0, 11):
            assert adjacent(JacobiParams(n, 1, 1), i) == gegenbauer(n + 2, i)
            assert adjacent(JacobiParams(n, 0, 0), i) == gegenbauer(n, i)


def test_adjacent_against_sympy_oracle():
    for n in range(2, 7):
        for (a, b) in ((1, 0), (0, 1), (1, 1)):
            for i in range(0, 7):
                assert adjacent(JacobiParams(n, a, b), i) == _sympy_normalized_jacobi(n, a, b, i)


def test_adjacent_param_validation():
    with pytest.raises(ValueError):
        JacobiParams(3, 2, 0)
    with pytest.raises(ValueError):
        JacobiParams(1, 0, 0)
    with pytest.raises(ValueError):
        adjacent(JacobiParams(3, 1, 0), -1)


def test_expand_basis_element():
    e = expand(gegenbauer(4, 3), 4)
    assert e.coeffs == (0, 0, 0, 1)


def test_expand_t_squared():
    # t^2 = 1/3 + (2/3) P_2^{(3)}
    e = expand(Polynomial([0, 0, 1]), 3)
    assert e.coeffs == (Fraction(1, 3), 0, Fraction(2, 3))


def test_expand_t_fourth_mean():
    # f_0 must be the plain average of t^4 on [-1,1] when n = 3
    e = expand(Polynomial([0, 0, 0, 0, 1]), 3)
    assert e.coeff(0) == Fraction(1, 5)


def test_expand_weighted_integral_oracle():
    # f_0 = integral of f * w / integral of w with w = (1-t^2)^((n-3)/2)
    t = sympy.Symbol("t")
    for n in (3, 5, 7):
        alpha = sympy.Rational(n - 3, 2)
        w = (1 - t ** 2) ** alpha
        for f in (Polynomial([0, 0, 1]), Polynomial([0, 0, 0, 0, 1]), Polynomial([1, 2, 3, 4])):
            fx = sum(sympy.Rational(c.numerator, c.denominator) * t ** j for j, c in enumerate(f.coeffs))
            expected = sympy.integrate(fx * w, (t, -1, 1)) / sympy.integrate(w, (t, -1, 1))
            got = expand(f, n).coeff(0)
            assert got == Fraction(int(expected.p), int(expected.q)), (n, f)


def test_round_trip_exact():
    rng = random.Random(20240811)
    for _ in range(25):
        deg = rng.randrange(0, 17)
        coeffs = [Fraction(rng.randrange(-50, 51), rng.randrange(1, 12)) for _ in range(deg + 1)]
        p = Polynomial(coeffs)
        n = rng.randrange(2, 9)
        assert reconstruct(expand(p, n)) == p


def test_expansion_value_at_one():
    e = GegenbauerExpansion(3, (Fraction(2, 5), 0, Fraction(4, 7), 0, Fraction(8, 35)))
    assert e.value_at_one() == Fraction(2, 5) + Fraction(4, 7) + Fraction(8, 35)
    assert e.coeff(10) == 0


def test_gegenbauer_values_matches_exact():
    xs = np.array([-1.0, -0.5, 0.0, 0.25, 1.0])
    vals = gegenbauer_values(4, 6, xs)
    for i in range(7):
        p = gegenbauer(4, i)
        for j, x in enumerate(xs):
            assert vals[i, j] == pytest.approx(p(float(x)), abs=1e-13)
