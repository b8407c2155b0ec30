"""Potential functions h(t) on [-1, 1] for energy problems.

Standard families: Riesz h(t) = (2-2t)^(-s/2) (infinite at t = 1),
Gaussian h(t) = exp(sigma*(t-1)), exact polynomial potentials, and
tabulated values with linear interpolation.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .polynomials import Polynomial

__all__ = ["Potential", "riesz", "gaussian", "polynomial_potential", "tabulated", "parse_potential"]


@dataclass(frozen=True)
class Potential:
    """A potential: nonnegative on [-1, 1), possibly +inf at t = 1."""

    kind: str
    s: float = 0.0
    sigma: float = 0.0
    poly: Polynomial | None = None
    table: tuple[tuple[float, float], ...] = field(default=())
    label: str = ""

    def __call__(self, t):
        if self.kind == "riesz":
            d = 2.0 - 2.0 * float(t)
            if d <= 0.0:
                return math.inf
            return d ** (-self.s / 2.0)
        if self.kind == "gaussian":
            return math.exp(self.sigma * (float(t) - 1.0))
        if self.kind == "poly":
            return self.poly(t)
        if self.kind == "tabulated":
            return self._interp(float(t))
        raise ValueError(f"unknown potential kind {self.kind!r}")

    def _interp(self, t: float) -> float:
        xs = [p[0] for p in self.table]
        j = bisect.bisect_left(xs, t)
        if j == 0:
            return self.table[0][1]
        if j == len(xs):
            return self.table[-1][1]
        (x0, y0), (x1, y1) = self.table[j - 1], self.table[j]
        if x1 == x0:
            return y0
        w = (t - x0) / (x1 - x0)
        return y0 * (1 - w) + y1 * w

    @property
    def is_polynomial(self) -> bool:
        return self.kind == "poly"

    def derivative_bound(self, lo: float, hi: float) -> float | None:
        """Upper bound on |h'| over [lo, hi]; None when unavailable/infinite."""
        if self.kind == "poly":
            return float(self.poly.derivative().coeff_norm())
        if self.kind == "gaussian":
            m = abs(self.sigma)
            return m * max(math.exp(self.sigma * (lo - 1.0)), math.exp(self.sigma * (hi - 1.0)))
        if self.kind == "riesz":
            # |h'(t)| = s * (2-2t)^(-s/2-1), increasing in t; blows up at 1
            if hi >= 1.0:
                return None
            d = 2.0 - 2.0 * hi
            return self.s * d ** (-self.s / 2.0 - 1.0)
        return None

    def describe(self) -> str:
        if self.label:
            return self.label
        if self.kind == "riesz":
            return f"riesz:{self.s:g}"
        if self.kind == "gaussian":
            return f"gaussian:{self.sigma:g}"
        if self.kind == "poly":
            return "poly:" + ",".join(self.poly.coeff_strings())
        return "tabulated"


def riesz(s: float) -> Potential:
    if s <= 0:
        raise ValueError(f"riesz exponent must be positive, got {s}")
    return Potential(kind="riesz", s=float(s))


def gaussian(sigma: float) -> Potential:
    return Potential(kind="gaussian", sigma=float(sigma))


def polynomial_potential(poly: Polynomial) -> Potential:
    return Potential(kind="poly", poly=poly)


def tabulated(points) -> Potential:
    pts = tuple(sorted((float(x), float(y)) for x, y in points))
    if not pts:
        raise ValueError("tabulated potential needs at least one point")
    return Potential(kind="tabulated", table=pts)


def parse_potential(spec: str) -> Potential:
    """Parse "riesz:s", "gaussian:sigma", or "poly:FILE" (monomial JSON).

    Polynomial potentials also accept inline comma-separated rational
    coefficients ("poly:1/5,0,0,0,1"), which is how they serialize.
    """
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise ValueError(f"malformed potential spec {spec!r}; expected kind:arg")
    if kind == "riesz":
        return riesz(float(arg))
    if kind == "gaussian":
        return gaussian(float(arg))
    if kind == "poly":
        if not Path(arg).is_file():
            try:
                coeffs = [Fraction(c) for c in arg.split(",")]
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"polynomial potential {arg!r} is neither a file nor coefficients") from None
            return polynomial_potential(Polynomial(coeffs))
        import json

        data = json.loads(Path(arg).read_text())
        if "monomial" not in data:
            raise ValueError(f"polynomial potential file {arg!r} needs a 'monomial' array")
        poly = Polynomial([Fraction(c) for c in data["monomial"]])
        return polynomial_potential(poly)
    raise ValueError(f"unknown potential kind {kind!r}")
