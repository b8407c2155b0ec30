"""Universal cardinality bounds and the tight-design classification.

The minimum size of a (k,k)-design in R^n is at least C(n+k-1, k), half of
the Delsarte-Goethals-Seidel minimum for (2k+1)-designs.  The certifying
polynomial is the square of the degree-k Gegenbauer polynomial in dimension
n+2, and any design attaining the bound has all its off-diagonal inner
products among that polynomial's zeros.  Everything here is exact integer
and rational arithmetic; float data appears only in the reported node
approximations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

from .gegenbauer import GegenbauerExpansion, JacobiParams, adjacent, expand, gegenbauer
from .polynomials import Polynomial

__all__ = [
    "dgs_bound",
    "dgs_polynomial",
    "UniversalBoundResult",
    "universal_bound",
    "TightnessVerdict",
    "tightness",
]


def dgs_bound(n: int, m: int) -> int:
    """Delsarte-Goethals-Seidel minimum cardinality D(n, m) for m-designs.

    D = 2 C(n+k-2, k-1) for m = 2k-1 and C(n+k-1, k) + C(n+k-2, k-1) for
    m = 2k; exact integers.
    """
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    if m < 1:
        raise ValueError(f"design strength must be >= 1, got {m}")
    if m % 2 == 1:
        k = (m + 1) // 2
        return 2 * comb(n + k - 2, k - 1)
    k = m // 2
    return comb(n + k - 1, k) + comb(n + k - 2, k - 1)


def dgs_polynomial(n: int, m: int) -> Polynomial:
    """The extremal polynomial behind D(n, m).

    (t+1) (P_{k-1}^{1,1})^2 for m = 2k-1 and (P_k^{1,0})^2 for m = 2k,
    with the adjacent polynomials taken in dimension n.
    """
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    if m < 1:
        raise ValueError(f"design strength must be >= 1, got {m}")
    if m % 2 == 1:
        k = (m + 1) // 2
        base = adjacent(JacobiParams(n, 1, 1), k - 1)
        return Polynomial([1, 1]) * base * base
    k = m // 2
    base = adjacent(JacobiParams(n, 1, 0), k)
    return base * base


@dataclass(frozen=True)
class UniversalBoundResult:
    """The universal bound C(n+k-1, k) with its certifying data."""

    n: int
    k: int
    bound: int
    polynomial: GegenbauerExpansion
    attaining_inner_products: tuple  # RootLocation list for the zeros of P_k^{(n+2)}
    dgs_reference: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "bound": self.bound,
            "dgs_reference": self.dgs_reference,
            "polynomial": {
                "dimension": self.polynomial.dimension,
                "coeffs": self.polynomial.coeff_strings(),
            },
            "attaining_inner_products": [loc.approx for loc in self.attaining_inner_products],
        }


def universal_bound(n: int, k: int) -> UniversalBoundResult:
    """Assemble and exactly verify the universal bound for (n, k).

    Asserts f(1)/f_0 = C(n+k-1, k) = D(n, 2k+1)/2 in rational arithmetic
    and that the expansion of (P_k^{(n+2)})^2 has no odd-index terms; a
    failure would be an implementation bug, not a data condition.
    """
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    base = gegenbauer(n + 2, k)
    fpoly = base * base
    expansion = expand(fpoly, n)
    bound = comb(n + k - 1, k)
    dgs = dgs_bound(n, 2 * k + 1)
    ratio = expansion.value_at_one() / expansion.coeff(0)
    if ratio != bound or 2 * bound != dgs:
        raise AssertionError(f"universal bound inconsistency at (n={n}, k={k}): f(1)/f_0={ratio}, C={bound}, D={dgs}")
    if any(expansion.coeff(i) != 0 for i in range(1, expansion.degree + 1, 2)):
        raise AssertionError(f"odd Gegenbauer coefficients in an even polynomial at (n={n}, k={k})")
    from .quadrature import gegenbauer_zeros

    nodes = tuple(gegenbauer_zeros(n, k))
    return UniversalBoundResult(n, k, bound, expansion, nodes, dgs)


@dataclass(frozen=True)
class TightnessVerdict:
    """What is known about designs attaining the universal bound at (n, k)."""

    n: int
    k: int
    status: str  # "attained_known", "open_case", "impossible"
    citation_case: str
    forbidden_cardinality: int | None = None  # the (2,2) nonexistence size, when applicable

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "status": self.status,
            "citation_case": self.citation_case,
            "forbidden_cardinality": self.forbidden_cardinality,
        }


def _is_odd_square_plus(n: int) -> bool:
    # n = u^2 - 2 for an odd positive integer u
    u2 = n + 2
    u = isqrt(u2)
    return u * u == u2 and u % 2 == 1


def _is_three_square_minus(n: int) -> bool:
    # n = 3 v^2 - 4 for an integer v >= 2
    if (n + 4) % 3 != 0:
        return False
    v2 = (n + 4) // 3
    v = isqrt(v2)
    return v * v == v2 and v >= 2


def tightness(n: int, k: int) -> TightnessVerdict:
    """Classification lookup for designs of the minimum size C(n+k-1, k).

    k = 1 is always attained (orthonormal bases); k = 2 needs n = 3 or
    n = u^2 - 2 with odd u (constructions known only for u = 3, 5, i.e.
    n = 7, 23); k = 3 needs n = 3v^2 - 4, v >= 2 (known only for v = 2, 3,
    i.e. n = 8, 23); k = 5 with n = 24 is attained (minimum-norm Leech
    vectors, halved); every other pair is impossible.  For k = 2 the verdict
    also carries the separately-forbidden cardinality C(n+1, 2) + 1.
    """
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    forbidden = comb(n + 1, 2) + 1 if (k == 2 and n >= 3) else None
    if k == 1:
        return TightnessVerdict(n, k, "attained_known", "(i) orthonormal basis", forbidden)
    if k == 2:
        if n == 3 or _is_odd_square_plus(n):
            status = "attained_known" if n in (3, 7, 23) else "open_case"
            return TightnessVerdict(n, k, status, "(ii) k=2, n=3 or n=u^2-2 (u odd)", forbidden)
        return TightnessVerdict(n, k, "impossible", "(ii) fails: n != 3 and n+2 is not an odd square", forbidden)
    if k == 3:
        if _is_three_square_minus(n):
            status = "attained_known" if n in (8, 23) else "open_case"
            return TightnessVerdict(n, k, status, "(iii) k=3, n=3v^2-4 (v >= 2)", forbidden)
        return TightnessVerdict(n, k, "impossible", "(iii) fails: n != 3v^2-4", forbidden)
    if k == 5 and n == 24:
        return TightnessVerdict(n, k, "attained_known", "(iv) k=5, n=24", forbidden)
    return TightnessVerdict(n, k, "impossible", "no classification clause admits this (n, k)", forbidden)
