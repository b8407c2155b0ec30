"""Linear-programming bound certificates over polynomial cones.

Three verify-then-bound operations: a polynomial whose Gegenbauer
coefficients obey the sign conditions and which is pointwise nonnegative
(resp. below/above a potential) certifies a cardinality lower bound
f(1)/f_0 (resp. an energy lower/upper bound M(f_0 M - f(1))) for spherical
(k,k)-designs.

Pointwise conditions are decided exactly by root isolation whenever the
comparison is between polynomials; for non-polynomial potentials a dense
Chebyshev grid with derivative-based safety margins is used and the
certificate records the method as "grid" (non-exact).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .codes import SphericalCode, moment
from .gegenbauer import GegenbauerExpansion, expand, gegenbauer_values, reconstruct
from .polynomials import Polynomial
from .potentials import Potential
from .roots import is_nonnegative_on

__all__ = [
    "CONES",
    "SignEvidence",
    "PointwiseEvidence",
    "ConeMembership",
    "BoundCertificate",
    "ConeViolationError",
    "check_cone",
    "cardinality_bound",
    "energy_lower_bound",
    "energy_upper_bound",
    "verify_identity",
    "EqualityReport",
    "equality_diagnostics",
    "certificate_to_json",
    "certificate_from_json",
]

CONES = ("F", "G", "M", "L", "U")
GRID_POINTS = 2048


class ConeViolationError(ValueError):
    """A bound was requested for a polynomial outside the required cone."""

    def __init__(self, membership: "ConeMembership"):
        self.membership = membership
        super().__init__(f"polynomial is not in cone {membership.cone}: {membership.failure_summary()}")


@dataclass(frozen=True)
class SignEvidence:
    index: int
    coefficient: Fraction
    requirement: str  # "> 0", "<= 0", ">= 0"
    satisfied: bool

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "coefficient": str(self.coefficient),
            "requirement": self.requirement,
            "satisfied": self.satisfied,
        }


@dataclass(frozen=True)
class PointwiseEvidence:
    requirement: str
    method: str  # "exact-roots", "grid", or "none"
    satisfied: bool
    worst_violation: float = 0.0
    witness: float | None = None

    def to_dict(self) -> dict:
        return {
            "requirement": self.requirement,
            "method": self.method,
            "satisfied": self.satisfied,
            "worst_violation": self.worst_violation,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class ConeMembership:
    cone: str
    dimension: int
    k: int
    sign_evidence: tuple[SignEvidence, ...]
    pointwise: PointwiseEvidence

    @property
    def is_member(self) -> bool:
        return all(e.satisfied for e in self.sign_evidence) and self.pointwise.satisfied

    def failure_summary(self) -> str:
        bad = [f"f_{e.index}={e.coefficient} violates {e.requirement}" for e in self.sign_evidence if not e.satisfied]
        if not self.pointwise.satisfied:
            bad.append(f"{self.pointwise.requirement} fails near t={self.pointwise.witness}")
        return "; ".join(bad) if bad else "member"

    def to_dict(self) -> dict:
        return {
            "cone": self.cone,
            "dimension": self.dimension,
            "k": self.k,
            "member": self.is_member,
            "sign_evidence": [e.to_dict() for e in self.sign_evidence],
            "pointwise": self.pointwise.to_dict(),
        }


def _sign_conditions(f: GegenbauerExpansion, k: int, mode: str) -> tuple[SignEvidence, ...]:
    # F-type: f_0 > 0 and f_i <= 0 for odd i <= 2k-1 and every i >= 2k+1.
    # G-type: same index set with f_i >= 0.
    out = [SignEvidence(0, f.coeff(0), "> 0", f.coeff(0) > 0)]
    for i in range(1, f.degree + 1):
        constrained = (i % 2 == 1 and i <= 2 * k - 1) or i >= 2 * k + 1
        if not constrained:
            continue
        c = f.coeff(i)
        if mode == "F":
            out.append(SignEvidence(i, c, "<= 0", c <= 0))
        else:
            out.append(SignEvidence(i, c, ">= 0", c >= 0))
    return tuple(out)


def _exact_pointwise(g: Polynomial, requirement: str) -> PointwiseEvidence:
    ok, witness = is_nonnegative_on(g)
    worst = 0.0
    if not ok:
        worst = -g(witness)
    return PointwiseEvidence(requirement, "exact-roots", ok, worst, witness)


def _grid_pointwise(fpoly: Polynomial, h: Potential, direction: int, requirement: str) -> PointwiseEvidence:
    """Grid check of f <= h (direction -1) or f >= h (direction +1).

    Chebyshev points plus a safety margin: between neighbouring grid points
    f moves at most width*sup|f'|, and the potential families here are
    monotone (or tabulated piecewise linear), so endpoint values of h bound
    it on each segment.
    """
    xs = np.cos(np.pi * np.arange(GRID_POINTS) / (GRID_POINTS - 1))[::-1]
    if h.kind == "tabulated":
        # include the table nodes so piecewise-linear h is endpoint-bounded
        # on every segment
        nodes = [x for x, _ in h.table if -1.0 < x < 1.0]
        xs = np.unique(np.concatenate([xs, np.array(nodes)])) if nodes else xs
    fc = [float(c) for c in fpoly.coeffs]
    fvals = np.polynomial.polynomial.polyval(xs, fc)
    hvals = np.array([h(float(x)) for x in xs])
    slope = float(fpoly.derivative().coeff_norm())
    worst = -math.inf
    witness = None
    for j in range(len(xs) - 1):
        w = float(xs[j + 1] - xs[j])
        h_lo = min(hvals[j], hvals[j + 1])
        h_hi = max(hvals[j], hvals[j + 1])
        if direction < 0:
            # violation if f - h can exceed 0: f <= min endpoint f + slack
            seg = min(fvals[j], fvals[j + 1]) + w * slope - h_lo
        else:
            if math.isinf(h_hi):
                seg = math.inf
            else:
                seg = h_hi - (max(fvals[j], fvals[j + 1]) - w * slope)
        if seg > worst:
            worst = seg
            witness = float((xs[j] + xs[j + 1]) / 2)
    satisfied = worst <= 0.0
    return PointwiseEvidence(requirement, "grid", satisfied, max(worst, 0.0), None if satisfied else witness)


def check_cone(f: GegenbauerExpansion, cone: str, k: int, h: Potential | None = None) -> ConeMembership:
    """Full membership evidence for f in one of the cones F, G, M, L, U.

    Negative verdicts are data (evidence with satisfied=False), not errors.
    """
    if cone not in CONES:
        raise ValueError(f"unknown cone {cone!r}; expected one of {CONES}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if cone in ("L", "U") and h is None:
        raise ValueError(f"cone {cone} needs a potential")
    if cone in ("F", "G", "M") and h is not None:
        raise ValueError(f"cone {cone} takes no potential")
    mode = "G" if cone in ("G", "L") else "F"
    signs = _sign_conditions(f, k, mode)
    if cone in ("F", "G"):
        pointwise = PointwiseEvidence("none", "none", True)
    else:
        fpoly = reconstruct(f)
        if cone == "M":
            pointwise = _exact_pointwise(fpoly, "f >= 0 on [-1,1]")
        elif cone == "L":
            if h.is_polynomial:
                pointwise = _exact_pointwise(h.poly - fpoly, "f <= h on [-1,1]")
            else:
                pointwise = _grid_pointwise(fpoly, h, -1, "f <= h on [-1,1]")
        else:
            if h.is_polynomial:
                pointwise = _exact_pointwise(fpoly - h.poly, "f >= h on [-1,1]")
            else:
                pointwise = _grid_pointwise(fpoly, h, +1, "f >= h on [-1,1]")
    return ConeMembership(cone, f.dimension, k, signs, pointwise)


@dataclass(frozen=True)
class BoundCertificate:
    """A checked bound: expansion, cone evidence, and the certified value."""

    expansion: GegenbauerExpansion
    membership: ConeMembership
    bound_kind: str  # "cardinality", "energy_lower", "energy_upper"
    value: Fraction
    inputs: dict = field(default_factory=dict)

    def recompute_value(self) -> Fraction:
        f0 = self.expansion.coeff(0)
        f1 = self.expansion.value_at_one()
        if self.bound_kind == "cardinality":
            return f1 / f0
        m = self.inputs["M"]
        return m * (f0 * m - f1)

    def to_dict(self) -> dict:
        value = self.value
        return {
            "bound_kind": self.bound_kind,
            "inputs": {key: (str(v) if isinstance(v, Fraction) else v) for key, v in self.inputs.items()},
            "expansion": {
                "dimension": self.expansion.dimension,
                "coeffs": self.expansion.coeff_strings(),
            },
            "value": str(value) if isinstance(value, Fraction) else value,
            "value_float": float(value),
            "membership": self.membership.to_dict(),
        }


def cardinality_bound(f: GegenbauerExpansion, k: int) -> BoundCertificate:
    """Certified lower bound f(1)/f_0 on the size of any (k,k)-design."""
    membership = check_cone(f, "M", k)
    if not membership.is_member:
        raise ConeViolationError(membership)
    value = f.value_at_one() / f.coeff(0)
    return BoundCertificate(f, membership, "cardinality", value, {"n": f.dimension, "k": k})


def _energy_bound(f: GegenbauerExpansion, k: int, M: int, h: Potential, cone: str, kind: str) -> BoundCertificate:
    if M < 2:
        raise ValueError(f"energy bounds need M >= 2 points, got {M}")
    membership = check_cone(f, cone, k, h)
    if not membership.is_member:
        raise ConeViolationError(membership)
    value = M * (f.coeff(0) * M - f.value_at_one())
    inputs = {"n": f.dimension, "k": k, "M": M, "potential": h.describe()}
    return BoundCertificate(f, membership, kind, value, inputs)


def energy_lower_bound(f: GegenbauerExpansion, k: int, M: int, h: Potential) -> BoundCertificate:
    """Certified lower bound M(f_0 M - f(1)) on the h-energy of (k,k)-designs of size M."""
    return _energy_bound(f, k, M, h, "L", "energy_lower")


def energy_upper_bound(f: GegenbauerExpansion, k: int, M: int, h: Potential) -> BoundCertificate:
    """Certified upper bound M(f_0 M - f(1)) on the h-energy of (k,k)-designs of size M."""
    return _energy_bound(f, k, M, h, "U", "energy_upper")


def verify_identity(code: SphericalCode, f: GegenbauerExpansion) -> tuple[float, float]:
    """Both sides of the summation identity behind all three bounds.

    lhs = |C| f(1) + sum_{x != y} f(<x,y>);
    rhs = |C|^2 f_0 + sum_{i >= 1} f_i M_i(C).
    """
    if code.dimension != f.dimension:
        raise ValueError(f"dimension mismatch: code is in R^{code.dimension}, expansion in R^{f.dimension}")
    m = code.cardinality
    off = code.offdiagonal()
    fpoly = reconstruct(f)
    fc = [float(c) for c in fpoly.coeffs]
    lhs = m * float(f.value_at_one()) + float(np.sum(np.polynomial.polynomial.polyval(off, fc)))
    rhs = m * m * float(f.coeff(0))
    for i in range(1, f.degree + 1):
        ci = f.coeff(i)
        if ci:
            rhs += float(ci) * moment(code, i)
    return lhs, rhs


@dataclass
class EqualityReport:
    """Diagnostics for the equality conditions of the LP bounds.

    Equality requires every off-diagonal inner product to be a root of f
    and every product f_i * M_i(C) (i >= 1) to vanish.
    """

    inner_product_violations: list[tuple[int, int, float, float]]
    coefficient_violations: list[tuple[int, float, float]]
    tolerance: float
    moment_scale: float

    @property
    def ok(self) -> bool:
        return not self.inner_product_violations and not self.coefficient_violations

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "tolerance": self.tolerance,
            "inner_product_violations": [
                {"x": i, "y": j, "t": t, "f(t)": v} for i, j, t, v in self.inner_product_violations
            ],
            "coefficient_violations": [
                {"index": i, "f_i": c, "f_i*M_i": p} for i, c, p in self.coefficient_violations
            ],
        }


def equality_diagnostics(code: SphericalCode, f: GegenbauerExpansion, k: int, tol: float = 1e-9) -> EqualityReport:
    """Which equality conditions fail, and by how much.

    Inner products are tested against |f(t)| <= tol; coefficient-moment
    products against tol * |C|^2 (moments scale quadratically in |C|).
    """
    if code.dimension != f.dimension:
        raise ValueError("dimension mismatch between code and expansion")
    fpoly = reconstruct(f)
    fc = [float(c) for c in fpoly.coeffs]
    gram = code.gram
    m = code.cardinality
    ip_viol = []
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            t = float(gram[i, j])
            v = float(np.polynomial.polynomial.polyval(t, fc))
            if abs(v) > tol:
                ip_viol.append((i, j, t, v))
    scale = tol * m * m
    coeff_viol = []
    for i in range(1, f.degree + 1):
        ci = f.coeff(i)
        if ci == 0:
            continue
        prod = float(ci) * moment(code, i)
        if abs(prod) > scale:
            coeff_viol.append((i, float(ci), prod))
    return EqualityReport(ip_viol, coeff_viol, tol, scale)


def certificate_to_json(cert: BoundCertificate) -> str:
    return json.dumps(cert.to_dict(), indent=2)


def certificate_from_json(text: str) -> BoundCertificate:
    """Rebuild a certificate from JSON and re-verify it from scratch."""
    data = json.loads(text)
    exp = GegenbauerExpansion(
        int(data["expansion"]["dimension"]),
        tuple(Fraction(c) for c in data["expansion"]["coeffs"]),
    )
    kind = data["bound_kind"]
    inputs = data["inputs"]
    k = int(inputs["k"])
    if kind == "cardinality":
        return cardinality_bound(exp, k)
    from .potentials import parse_potential

    h = parse_potential(inputs["potential"])
    M = int(inputs["M"])
    if kind == "energy_lower":
        return energy_lower_bound(exp, k, M, h)
    if kind == "energy_upper":
        return energy_upper_bound(exp, k, M, h)
    raise ValueError(f"unknown bound kind {kind!r}")
