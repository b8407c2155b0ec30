"""DGS bounds, the universal (k,k) bound, and the tightness lookup."""

from fractions import Fraction
from math import comb

import pytest

from kkdesign.certificates import equality_diagnostics
from kkdesign.codes import construct, is_kk_design
from kkdesign.gegenbauer import expand, gegenbauer
from kkdesign.polynomials import Polynomial
from kkdesign.universal import dgs_bound, dgs_polynomial, tightness, universal_bound


def test_dgs_bound_values():
    assert dgs_bound(3, 5) == 12
    assert dgs_bound(3, 4) == 9
    assert dgs_bound(3, 3) == 6
    assert dgs_bound(2, 1) == 2


def test_dgs_bound_validation():
    with pytest.raises(ValueError):
        dgs_bound(1, 3)
    with pytest.raises(ValueError):
        dgs_bound(3, 0)


def test_dgs_polynomial_odd_case():
    # (t+1) (P_2^{1,1})^2 with P_2^{1,1} = P_2^{(5)} in dimension 3
    base = gegenbauer(5, 2)
    assert dgs_polynomial(3, 5) == Polynomial([1, 1]) * base * base
    assert dgs_polynomial(3, 1) == Polynomial([1, 1])


def test_dgs_polynomial_even_case_ratio():
    d = dgs_polynomial(3, 4)
    assert d(Fraction(1)) == 1
    e = expand(d, 3)
    assert e.value_at_one() / e.coeff(0) == 9


def test_dgs_polynomial_bound_consistency():
    # d_m(1)/f_0 reproduces D(n, m) for both parities
    for n in range(2, 8):
        for m in range(1, 9):
            e = expand(dgs_polynomial(n, m), n)
            assert e.value_at_one() / e.coeff(0) == dgs_bound(n, m), (n, m)


def test_universal_bound_small_cases():
    result = universal_bound(3, 2)
    assert result.bound == 6
    approx = sorted(loc.approx for loc in result.attaining_inner_products)
    assert approx[0] == pytest.approx(-(5 ** -0.5), abs=1e-12)
    assert approx[1] == pytest.approx(5 ** -0.5, abs=1e-12)

    result = universal_bound(4, 1)
    assert result.bound == 4
    assert [loc.approx for loc in result.attaining_inner_products] == [0.0]


def test_universal_bound_leech_case():
    assert universal_bound(24, 5).bound == comb(28, 5) == 98280


def test_halving_identity_and_exact_chain():
    for n in range(2, 11):
        for k in range(1, 7):
            result = universal_bound(n, k)
            assert 2 * result.bound == dgs_bound(n, 2 * k + 1)
            e = result.polynomial
            assert e.value_at_one() / e.coeff(0) == comb(n + k - 1, k)
            # f_0 of (P_k^{(n+2)})^2 coincides with f_0 of d_{2k+1}
            d_exp = expand(dgs_polynomial(n, 2 * k + 1), n)
            assert e.coeff(0) == d_exp.coeff(0)
            assert all(e.coeff(i) == 0 for i in range(1, e.degree + 1, 2))


def test_universal_bound_attainment():
    for n in range(2, 9):
        basis = construct("orthonormal_basis", n)
        assert basis.cardinality == comb(n, 1)
        assert is_kk_design(basis, 1).passed
        assert equality_diagnostics(basis, universal_bound(n, 1).polynomial, 1).ok
    ico_half = construct("icosahedron_half", 3)
    assert ico_half.cardinality == comb(4, 2)
    assert is_kk_design(ico_half, 2).passed
    assert equality_diagnostics(ico_half, universal_bound(3, 2).polynomial, 2).ok


def test_tightness_attained_cases():
    assert tightness(3, 2).status == "attained_known"
    assert "(ii)" in tightness(3, 2).citation_case
    assert tightness(7, 2).status == "attained_known"
    assert tightness(23, 2).status == "attained_known"
    assert tightness(8, 3).status == "attained_known"
    assert "(iii)" in tightness(8, 3).citation_case
    assert tightness(23, 3).status == "attained_known"
    assert tightness(24, 5).status == "attained_known"
    assert "(iv)" in tightness(24, 5).citation_case
    for n in (2, 5, 13, 24):
        assert tightness(n, 1).status == "attained_known"


def test_tightness_impossible_cases():
    assert tightness(5, 2).status == "impossible"
    assert tightness(4, 4).status == "impossible"
    assert tightness(24, 2).status == "impossible"
    assert tightness(9, 3).status == "impossible"
    assert tightness(23, 5).status == "impossible"
    assert tightness(6, 6).status == "impossible"


def test_tightness_open_cases():
    assert tightness(47, 2).status == "open_case"  # u = 7
    assert tightness(119, 2).status == "open_case"  # u = 11
    assert tightness(44, 3).status == "open_case"  # v = 4
    assert tightness(71, 3).status == "open_case"  # v = 5


def test_tightness_forbidden_cardinality():
    verdict = tightness(5, 2)
    assert verdict.forbidden_cardinality == comb(6, 2) + 1
    assert tightness(4, 1).forbidden_cardinality is None
    assert tightness(2, 2).forbidden_cardinality is None  # stated for n >= 3


def test_tightness_validation():
    with pytest.raises(ValueError):
        tightness(1, 1)
    with pytest.raises(ValueError):
        tightness(3, 0)
