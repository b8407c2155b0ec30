"""Normalized Gegenbauer polynomials and their adjacent (Jacobi) relatives.

All polynomials are normalized to take the value 1 at t = 1 and are built
exactly over the rationals via three-term recurrences.  Basis conversion to
and from the monomial basis is done by exact triangular elimination, never
by quadrature.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .polynomials import ONE, T, Polynomial

__all__ = [
    "gegenbauer",
    "JacobiParams",
    "adjacent",
    "GegenbauerExpansion",
    "expand",
    "reconstruct",
    "gegenbauer_values",
]


@lru_cache(maxsize=None)
def gegenbauer(n: int, i: int) -> Polynomial:
    """Normalized Gegenbauer polynomial of degree ``i`` for dimension ``n``.

    Satisfies (i+n-2) P_{i+1} = (2i+n-2) t P_i - i P_{i-1} with P_0 = 1,
    P_1 = t, so P_i(1) = 1 for all i.
    """
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    if i < 0:
        raise ValueError(f"degree must be >= 0, got {i}")
    if i == 0:
        return ONE
    if i == 1:
        return T
    prev, cur = ONE, T
    for j in range(1, i):
        nxt = (T * cur * Fraction(2 * j + n - 2, j + n - 2)
               - prev * Fraction(j, j + n - 2))
        prev, cur = cur, nxt
    return cur


@dataclass(frozen=True)
class JacobiParams:
    """Parameters for the adjacent polynomials P_i^{a,b} in dimension n.

    (a, b) = (0, 0) reproduces the plain Gegenbauer polynomials and
    (a, b) = (1, 1) reproduces them in dimension n + 2.
    """

    dimension: int
    a: int
    b: int

    def __post_init__(self):
        if self.dimension < 2:
            raise ValueError(f"dimension must be >= 2, got {self.dimension}")
        if self.a not in (0, 1) or self.b not in (0, 1):
            raise ValueError(f"adjacent parameters must lie in {{0,1}}, got ({self.a},{self.b})")


@lru_cache(maxsize=None)
def _adjacent_cached(n: int, a: int, b: int, i: int) -> Polynomial:
    # Jacobi parameters (alpha, beta) = ((n-3)/2 + a, (n-3)/2 + b); the
    # classical recurrence runs over Fractions, so half-integers are exact.
    alpha = Fraction(n - 3, 2) + a
    beta = Fraction(n - 3, 2) + b
    if i == 0:
        return ONE
    polys = [ONE, Polynomial([(alpha - beta) / 2, (alpha + beta + 2) / 2])]
    for m in range(2, i + 1):
        s = alpha + beta
        c0 = 2 * m * (m + s) * (2 * m + s - 2)
        c1 = (2 * m + s - 1) * (alpha ** 2 - beta ** 2)
        c2 = (2 * m + s - 1) * (2 * m + s) * (2 * m + s - 2)
        c3 = 2 * (m + alpha - 1) * (m + beta - 1) * (2 * m + s)
        nxt = ((polys[m - 1] * c1 + T * polys[m - 1] * c2) - polys[m - 2] * c3) / c0
        polys.append(nxt)
    p = polys[i]
    value_at_one = p(Fraction(1))
    return p / value_at_one


def adjacent(params: JacobiParams, i: int) -> Polynomial:
    """Adjacent polynomial P_i^{a,b} for dimension n, normalized to 1 at t = 1."""
    if i < 0:
        raise ValueError(f"degree must be >= 0, got {i}")
    return _adjacent_cached(params.dimension, params.a, params.b, i)


@dataclass(frozen=True)
class GegenbauerExpansion:
    """Coefficients f_0..f_m of a polynomial in the basis P_i^{(n)}."""

    dimension: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.dimension < 2:
            raise ValueError(f"dimension must be >= 2, got {self.dimension}")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)

    def value_at_one(self) -> Fraction:
        """f(1) = sum of the coefficients, since every P_i(1) = 1."""
        return sum(self.coeffs, Fraction(0))

    def coeff_norm(self) -> Fraction:
        return sum((abs(c) for c in self.coeffs), Fraction(0))

    def coeff_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def expand(f: Polynomial, n: int) -> GegenbauerExpansion:
    """Exact Gegenbauer expansion of ``f`` in dimension ``n``.

    Triangular elimination from the highest degree down: the leading
    monomial coefficient fixes f_m, subtract f_m P_m, repeat.
    """
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    work = list(f.coeffs)
    out = [Fraction(0)] * len(work)
    for m in range(len(work) - 1, -1, -1):
        basis = gegenbauer(n, m)
        c = work[m] / basis.coeffs[-1]
        out[m] = c
        if c:
            for j, bc in enumerate(basis.coeffs):
                work[j] -= c * bc
    assert all(w == 0 for w in work)
    return GegenbauerExpansion(n, tuple(out))


def reconstruct(expansion: GegenbauerExpansion) -> Polynomial:
    """Rebuild the monomial-basis polynomial sum f_i P_i^{(n)}; exact."""
    total = Polynomial([0])
    for i, c in enumerate(expansion.coeffs):
        if c:
            total = total + gegenbauer(expansion.dimension, i) * c
    return total


def gegenbauer_values(n: int, max_degree: int, x: np.ndarray) -> np.ndarray:
    """Float evaluation of P_0..P_max_degree at the points ``x``.

    Returns an array of shape (max_degree + 1,) + x.shape.  Runs the
    recurrence vectorized over x; this is the float workhorse behind
    moments and energies.
    """
    x = np.asarray(x, dtype=float)
    out = np.empty((max_degree + 1,) + x.shape, dtype=float)
    out[0] = 1.0
    if max_degree == 0:
        return out
    out[1] = x
    for j in range(1, max_degree):
        out[j + 1] = ((2 * j + n - 2) * x * out[j] - j * out[j - 1]) / (j + n - 2)
    return out
