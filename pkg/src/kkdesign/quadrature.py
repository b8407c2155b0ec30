"""Levenshtein-type quadrature and the optimality test functions.

The rule has fixed weight 1/D(n, 2k+1) at t = -1 and t = 1 and k interior
nodes at the zeros of P_k^{(n+2)}; it reproduces the Gegenbauer mean f_0 of
every polynomial of degree at most 2k.  Applying it to P_j^{(n)} gives the
test functions Q_j: a negative value at some j would signal that the
universal cardinality bound can be improved by linear programming, and the
proved pattern is Q_j = 0 for all j <= 2k and all odd j.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .gegenbauer import expand, gegenbauer, gegenbauer_values
from .polynomials import Polynomial, T
from .roots import RootLocation, isolate_distinct_roots, refine_root
from .universal import dgs_bound

__all__ = [
    "SingularSystemError",
    "gegenbauer_zeros",
    "QuadratureRule",
    "levenshtein_rule",
    "test_function",
    "TestFunctionTable",
    "optimality_scan",
    "scan_to_csv",
]

NODE_WIDTH = Fraction(1, 10 ** 14)
ZERO_THRESHOLD = 1e-9


class SingularSystemError(RuntimeError):
    """Weight system unexpectedly degenerate or rule validation failed."""


def gegenbauer_zeros(n: int, k: int) -> list[RootLocation]:
    """The k simple zeros of P_k^{(n+2)} in (-1, 1), strictly increasing.

    Positive zeros are isolated and bisected to interval width <= 1e-14;
    negative zeros are their exact mirrors, and 0 is an exact zero when k
    is odd.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    p = gegenbauer(n + 2, k)
    positive = [
        refine_root(p, loc, NODE_WIDTH)
        for loc in isolate_distinct_roots(p, Fraction(0), Fraction(1))
    ]
    if len(positive) != k // 2:
        raise AssertionError(f"expected {k // 2} positive zeros of P_{k}^{({n + 2})}, found {len(positive)}")
    nodes = [RootLocation(-loc.hi, -loc.lo) for loc in reversed(positive)]
    if k % 2 == 1:
        nodes.append(RootLocation(Fraction(0), Fraction(0), exact=Fraction(0)))
    nodes.extend(positive)
    return nodes


def _even_part_in_u(p: Polynomial) -> Polynomial:
    """For even p, the polynomial q with q(t^2) = p(t)."""
    if any(c != 0 for c in p.coeffs[1::2]):
        raise ValueError("polynomial is not even")
    return Polynomial(p.coeffs[0::2])


def _pair_u_values(n: int, k: int) -> list[Fraction] | None:
    """Exact u = t^2 values of the positive zeros, when rational.

    The positive zeros solve q(u) = 0 where q is the even part of
    P_k^{(n+2)} (divided by t for odd k); rational roots exist exactly when
    q is linear, i.e. k <= 3.
    """
    p = gegenbauer(n + 2, k)
    if k % 2 == 1:
        p = p.divmod(T)[0]
    q = _even_part_in_u(p)
    if q.degree == 0:
        return []
    if q.degree == 1:
        return [-q.coeffs[0] / q.coeffs[1]]
    return None


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over Fractions for the tiny weight systems."""
    m = len(rhs)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(m):
        pivot = next((r for r in range(col, m) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularSystemError("exact weight system is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col]
        a[col] = [v / inv for v in a[col]]
        for r in range(m):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return [a[r][m] for r in range(m)]


@dataclass(frozen=True)
class QuadratureRule:
    """Endpoint weight, interior nodes, and interior weights for (n, k)."""

    n: int
    k: int
    endpoint_weight: Fraction  # applied at both t = -1 and t = +1
    interior_nodes: tuple[RootLocation, ...]
    interior_weights: tuple  # Fractions when exact, floats otherwise
    exact: bool

    @property
    def dgs(self) -> int:
        return int(1 / self.endpoint_weight)

    def apply_to_polynomial(self, p: Polynomial) -> float:
        """Float application of the rule to an exact polynomial."""
        total = float(self.endpoint_weight) * (p(1.0) + p(-1.0))
        for loc, w in zip(self.interior_nodes, self.interior_weights):
            total += float(w) * p(loc.approx)
        return total

    def apply_exact(self, p: Polynomial) -> Fraction:
        """Exact application; needs exact weights (rule.exact).

        Symmetric node pairs contribute w (p(t) + p(-t)), which only sees
        the even part of p at the rational u = t^2, so the result is an
        exact rational for any exact polynomial.
        """
        if not self.exact:
            raise ValueError("rule does not carry exact weights")
        total = self.endpoint_weight * (p(Fraction(1)) + p(Fraction(-1)))
        half = len(self.interior_nodes) // 2
        if self.k % 2 == 1:
            total += self.interior_weights[half] * p(Fraction(0))
        even = Polynomial(list(p.coeffs[0::2]))
        odd_weight_pairs = zip(self.interior_weights[-half:] if half else [], self._pair_us())
        for w, u in odd_weight_pairs:
            total += 2 * w * even(u)
        return total

    def _pair_us(self) -> list[Fraction]:
        us = _pair_u_values(self.n, self.k)
        assert us is not None
        return us


def levenshtein_rule(n: int, k: int) -> QuadratureRule:
    """Construct and validate the quadrature rule for (n, k).

    Interior weights solve the exactness conditions on the even Gegenbauer
    polynomials P_0, P_2, ..., restricted to the symmetric weight pattern
    the rule is known to have (equal weights on mirrored nodes); that
    reduced system is provably nonsingular.  The finished rule is checked
    against the exact Gegenbauer mean of every monomial of degree <= 2k.
    """
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    nodes = gegenbauer_zeros(n, k)
    dgs = dgs_bound(n, 2 * k + 1)
    endpoint = Fraction(1, dgs)
    unknowns = (k + 1) // 2  # one weight per positive node, plus middle for odd k
    has_middle = k % 2 == 1
    pair_us = _pair_u_values(n, k)

    if pair_us is not None:
        # exact path: all node squares rational
        matrix: list[list[Fraction]] = []
        rhs: list[Fraction] = []
        for j in range(unknowns):
            basis = gegenbauer(n, 2 * j)
            even = _even_part_in_u(basis)
            row = []
            if has_middle:
                row.append(basis(Fraction(0)))
            row.extend(2 * even(u) for u in pair_us)
            matrix.append(row)
            rhs.append(Fraction(1) - 2 * endpoint if j == 0 else -2 * endpoint)
        solved = _solve_exact(matrix, rhs)
        if has_middle:
            middle = [solved[0]]
            pair_weights = solved[1:]
        else:
            middle = []
            pair_weights = solved
        weights = tuple(list(reversed(pair_weights)) + middle + list(pair_weights))
        exact = True
    else:
        pos = [loc.approx for loc in nodes[-(k // 2):]]
        a = np.zeros((unknowns, unknowns))
        b = np.zeros(unknowns)
        for j in range(unknowns):
            vals = gegenbauer_values(n, 2 * j, np.array([0.0] + pos))[2 * j]
            col = 0
            if has_middle:
                a[j, col] = vals[0]
                col += 1
            for idx in range(len(pos)):
                a[j, col + idx] = 2.0 * vals[1 + idx]
            b[j] = (1.0 - 2.0 / dgs) if j == 0 else (-2.0 / dgs)
        try:
            solved = np.linalg.solve(a, b)
        except np.linalg.LinAlgError as exc:
            raise SingularSystemError(f"weight system singular at (n={n}, k={k})") from exc
        middle = [float(solved[0])] if has_middle else []
        pair_weights = [float(v) for v in (solved[1:] if has_middle else solved)]
        weights = tuple(list(reversed(pair_weights)) + middle + list(pair_weights))
        exact = False

    rule = QuadratureRule(n, k, endpoint, tuple(nodes), weights, exact)
    if any(float(w) <= 0 for w in weights):
        raise SingularSystemError(f"nonpositive interior weight at (n={n}, k={k}): {weights}")
    _validate_rule(rule)
    return rule


def _validate_rule(rule: QuadratureRule) -> None:
    """Exactness on every monomial of degree <= 2k against the exact f_0."""
    for d in range(2 * rule.k + 1):
        mono = Polynomial([0] * d + [1])
        f0 = expand(mono, rule.n).coeff(0)
        if rule.exact:
            if rule.apply_exact(mono) != f0:
                raise SingularSystemError(f"exact rule fails on t^{d} at (n={rule.n}, k={rule.k})")
        else:
            got = rule.apply_to_polynomial(mono)
            if abs(got - float(f0)) > 1e-12:
                raise SingularSystemError(
                    f"rule validation failed on t^{d} at (n={rule.n}, k={rule.k}): {got} vs {float(f0)}"
                )


def test_function(n: int, k: int, j: int, rule: QuadratureRule | None = None) -> float:
    """Q_j: the rule applied to P_j^{(n)}; zero for j <= 2k and odd j."""
    if j < 1:
        raise ValueError(f"test function index must be >= 1, got {j}")
    if rule is None:
        rule = levenshtein_rule(n, k)
    return rule.apply_to_polynomial(gegenbauer(n, j))


@dataclass
class TestFunctionTable:
    """Q_j values for j = 1..j_max with the improvement verdict."""

    n: int
    k: int
    values: dict[int, float]
    classifications: dict[int, str]  # "proved_zero" or "computed"

    @property
    def improvement_degrees(self) -> list[int]:
        return [j for j, q in sorted(self.values.items()) if q < -ZERO_THRESHOLD]

    @property
    def verdict(self) -> str:
        base = f"no improvement possible with degree <= {2 * self.k}"
        extra = "".join(f"; improvement indicated at degree {j}" for j in self.improvement_degrees)
        return base + extra


def optimality_scan(n: int, k: int, j_max: int | None = None) -> TestFunctionTable:
    """Tabulate Q_j for j = 1..j_max (default 4k + 4)."""
    if j_max is None:
        j_max = 4 * k + 4
    if j_max < 2 * k:
        raise ValueError(f"j_max must cover the proved-zero region: {j_max} < {2 * k}")
    rule = levenshtein_rule(n, k)
    values = {}
    classes = {}
    for j in range(1, j_max + 1):
        values[j] = test_function(n, k, j, rule)
        classes[j] = "proved_zero" if (j <= 2 * k or j % 2 == 1) else "computed"
    return TestFunctionTable(n, k, values, classes)


def scan_to_csv(table: TestFunctionTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["j", "Q_j", "classification"])
    for j in sorted(table.values):
        writer.writerow([j, format(table.values[j], ".12g"), table.classifications[j]])
    return buf.getvalue()
