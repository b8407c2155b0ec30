"""Exact polynomial arithmetic: ring ops, evaluation, euclidean tools."""

from fractions import Fraction

import pytest

from kkdesign.polynomials import ONE, T, ZERO, Polynomial


def test_construction_strips_trailing_zeros():
    p = Polynomial([1, 2, 0, 0])
    assert p.coeffs == (Fraction(1), Fraction(2))
    assert p.degree == 1
    assert Polynomial([0, 0, 0]).is_zero


def test_ring_arithmetic_exact():
    p = (T + 1) * (T - 1)
    assert p == Polynomial([-1, 0, 1])
    assert (T + 1) ** 2 == Polynomial([1, 2, 1])
    q = Polynomial([Fraction(1, 3), Fraction(2, 7)])
    assert q * 21 == Polynomial([7, 6])
    assert q - q == ZERO
    assert (q / Fraction(1, 3)).coeffs == (Fraction(1), Fraction(6, 7))


def test_horner_evaluation_matches_kind():
    p = Polynomial([Fraction(-1, 4), 0, Fraction(5, 4)])  # (5t^2-1)/4
    assert p(Fraction(1)) == 1
    assert p(Fraction(0)) == Fraction(-1, 4)
    assert p(1.0) == pytest.approx(1.0)
    assert isinstance(p(0.5), float)
    assert isinstance(p(Fraction(1, 2)), Fraction)
    assert T(Fraction(1, 2)) == Fraction(1, 2)


def test_divmod_identity():
    a = Polynomial([3, -2, 0, 1, 5])
    b = Polynomial([1, 1, 2])
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_gcd_and_squarefree_part():
    p = (T - 1) ** 2 * T
    g = p.gcd(p.derivative())
    # gcd is monic (t - 1)
    assert g == Polynomial([-1, 1])
    sf = p.squarefree_part()
    # same distinct roots {0, 1}, both simple
    assert sf(Fraction(0)) == 0 and sf(Fraction(1)) == 0
    assert sf.degree == 2


def test_parity_detection():
    assert Polynomial([1, 0, 3]).parity() == 0
    assert Polynomial([0, 1, 0, 5]).parity() == 1
    assert Polynomial([1, 1]).parity() is None


def test_coeff_norm_bounds_values_on_unit_interval():
    p = Polynomial([1, -3, 2, Fraction(1, 2)])
    bound = float(p.coeff_norm())
    for t in (-1.0, -0.3, 0.0, 0.9, 1.0):
        assert abs(p(t)) <= bound + 1e-12


def test_integer_coeffs_positive_scaling():
    p = Polynomial([Fraction(1, 6), Fraction(-2, 9)])
    ints = p.integer_coeffs()
    assert ints == [3, -4]


def test_string_round_trip():
    p = Polynomial.from_strings(["-1/4", "0", "5/4"])
    assert p.coeff_strings() == ["-1/4", "0", "5/4"]
    assert p == Polynomial([Fraction(-1, 4), 0, Fraction(5, 4)])


def test_immutability():
    with pytest.raises(AttributeError):
        ONE.coeffs = (Fraction(2),)
