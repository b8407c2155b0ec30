"""The quadrature rule, its exactness, and the test-function scan."""

import math
import random
from fractions import Fraction

import pytest

from kkdesign.gegenbauer import expand
from kkdesign.polynomials import Polynomial
from kkdesign.quadrature import (
    SingularSystemError,
    gegenbauer_zeros,
    levenshtein_rule,
    optimality_scan,
    scan_to_csv,
    test_function as q_value,
)
from kkdesign.universal import dgs_bound


def test_zeros_k2():
    nodes = gegenbauer_zeros(3, 2)
    target = 1.0 / math.sqrt(5.0)
    assert len(nodes) == 2
    assert nodes[0].approx == pytest.approx(-target, abs=1e-13)
    assert nodes[1].approx == pytest.approx(target, abs=1e-13)
    assert all(loc.width <= Fraction(1, 10 ** 14) for loc in nodes)


def test_zeros_k1_exact_origin():
    nodes = gegenbauer_zeros(3, 1)
    assert len(nodes) == 1
    assert nodes[0].is_exact and nodes[0].exact == 0


def test_zeros_k3_symmetric_with_origin():
    nodes = gegenbauer_zeros(4, 3)
    assert len(nodes) == 3
    assert nodes[1].is_exact and nodes[1].exact == 0
    assert nodes[0].approx == -nodes[2].approx  # exact mirrors
    assert nodes[0].approx < 0 < nodes[2].approx


def test_node_ordering_and_symmetry():
    for n in range(3, 7):
        for k in range(1, 6):
            nodes = gegenbauer_zeros(n, k)
            approx = [loc.approx for loc in nodes]
            assert approx == sorted(approx)
            assert len(nodes) == k
            for i in range(k):
                assert approx[i] == pytest.approx(-approx[k - 1 - i], abs=1e-13)


def test_rule_n3_k1_exact_weight():
    rule = levenshtein_rule(3, 1)
    assert rule.endpoint_weight == Fraction(1, 6)
    assert rule.exact
    assert rule.interior_weights == (Fraction(2, 3),)
    # sum of all weights reproduces f_0 of the constant
    assert rule.apply_exact(Polynomial([1])) == 1


def test_rule_constant_reproduced():
    for n in range(3, 7):
        for k in range(1, 5):
            rule = levenshtein_rule(n, k)
            assert rule.apply_to_polynomial(Polynomial([1])) == pytest.approx(1.0, abs=1e-13)


def test_rule_n3_k2_t4():
    rule = levenshtein_rule(3, 2)
    # exact weights (nodes have rational squares)
    assert rule.exact
    assert rule.apply_exact(Polynomial([0, 0, 0, 0, 1])) == Fraction(1, 5)


def test_rule_exactness_random_polynomials():
    rng = random.Random(20240812)
    for n in range(3, 7):
        for k in range(1, 5):
            rule = levenshtein_rule(n, k)
            for _ in range(50):
                deg = rng.randrange(0, 2 * k + 1)
                coeffs = [Fraction(rng.randrange(-100, 101), 100) for _ in range(deg + 1)]
                p = Polynomial(coeffs)
                f0 = float(expand(p, n).coeff(0))
                assert abs(rule.apply_to_polynomial(p) - f0) <= 1e-10, (n, k, coeffs)


def test_weights_positive():
    for n in range(3, 9):
        for k in range(1, 6):
            rule = levenshtein_rule(n, k)
            assert all(float(w) > 0 for w in rule.interior_weights), (n, k)


def test_endpoint_weight_matches_dgs():
    for n in range(3, 9):
        for k in range(1, 6):
            rule = levenshtein_rule(n, k)
            assert rule.endpoint_weight == Fraction(1, dgs_bound(n, 2 * k + 1))


def test_test_function_zero_pattern():
    for n in range(3, 7):
        for k in range(1, 5):
            rule = levenshtein_rule(n, k)
            for j in range(1, 4 * k + 5):
                q = q_value(n, k, j, rule)
                if j <= 2 * k or j % 2 == 1:
                    assert abs(q) <= 1e-9, (n, k, j, q)


def test_test_function_beyond_proved_region():
    rule = levenshtein_rule(3, 2)
    # computed value at j = 6; sign is an output, recorded not asserted,
    # but it must be reproducible
    q6 = q_value(3, 2, 6, rule)
    assert q6 == q_value(3, 2, 6, rule)
    with pytest.raises(ValueError):
        q_value(3, 2, 0, rule)


def test_optimality_scan_no_improvement():
    table = optimality_scan(3, 2, 4)
    assert all(abs(v) <= 1e-9 for v in table.values.values())
    assert table.verdict.startswith("no improvement possible with degree <= 4")
    assert table.improvement_degrees == []


def test_optimality_scan_low_degree_zeros():
    table = optimality_scan(5, 1, 2)
    assert all(abs(v) <= 1e-9 for v in table.values.values())


def test_optimality_scan_window():
    table = optimality_scan(3, 2, 12)
    assert set(table.values) == set(range(1, 13))
    for j in range(5, 13):
        expected = "proved_zero" if j % 2 == 1 else "computed"
        assert table.classifications[j] == expected
    with pytest.raises(ValueError):
        optimality_scan(3, 2, 3)


def test_default_window():
    table = optimality_scan(4, 2)
    assert max(table.values) == 4 * 2 + 4


def test_scan_csv_format():
    table = optimality_scan(3, 1, 6)
    text = scan_to_csv(table)
    lines = text.strip().splitlines()
    assert lines[0] == "j,Q_j,classification"
    assert len(lines) == 7
    first = lines[1].split(",")
    assert first[0] == "1" and first[2] == "proved_zero"


def test_rule_validation_catches_bad_weights():
    rule = levenshtein_rule(3, 2)
    broken = type(rule)(
        rule.n, rule.k, rule.endpoint_weight, rule.interior_nodes,
        (Fraction(1, 3), Fraction(1, 3)), True,
    )
    from kkdesign.quadrature import _validate_rule

    with pytest.raises(SingularSystemError):
        _validate_rule(broken)
