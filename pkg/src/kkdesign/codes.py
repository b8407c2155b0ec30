"""Spherical codes: moments, design verification, energies, constructions.

A code is a finite set of unit vectors in R^n.  Moments are double sums of
normalized Gegenbauer polynomials over the Gram matrix; a code is a
(k,k)-design when the even moments M_2, ..., M_2k vanish.  Verification is
floating point with declared scaling: moment residuals are compared against
tol*|C|^2 and per-point sums against tol*|C|.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .gegenbauer import gegenbauer_values
from .potentials import Potential

__all__ = [
    "SphericalCode",
    "DesignReport",
    "InfiniteEnergyError",
    "NotAntipodalError",
    "OverlapError",
    "UnknownConstructionError",
    "moment",
    "per_point_moment",
    "is_design",
    "is_kk_design",
    "energy",
    "antipodal_halve",
    "antipodal_double",
    "construct",
    "fourth_moment_residual",
    "load_code",
    "save_code",
]

NORM_TOL = 1e-12
ANTIPODAL_TOL = 1e-9


class InfiniteEnergyError(ValueError):
    """Energy sum hits a point where the potential is infinite."""


class NotAntipodalError(ValueError):
    """Code is not (unambiguously) antipodal."""


class OverlapError(ValueError):
    """Code and its negation share a point."""


class UnknownConstructionError(ValueError):
    """No built-in construction with that name."""


class SphericalCode:
    """Immutable list of unit vectors with cached Gram data."""

    def __init__(self, dimension: int, points, *, normalize: bool = False):
        if dimension < 2:
            raise ValueError(f"dimension must be >= 2, got {dimension}")
        pts = np.array(points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != dimension:
            raise ValueError(f"points must be an (M, {dimension}) array, got shape {pts.shape}")
        if pts.shape[0] < 1:
            raise ValueError("a spherical code needs at least one point")
        norms = np.linalg.norm(pts, axis=1)
        if normalize:
            if np.any(norms == 0):
                raise ValueError("cannot normalize a zero vector")
            pts = pts / norms[:, None]
        elif np.any(np.abs(norms - 1.0) > NORM_TOL):
            worst = float(np.max(np.abs(norms - 1.0)))
            raise ValueError(f"points must be unit vectors (worst norm deviation {worst:.3e})")
        pts.setflags(write=False)
        self.dimension = dimension
        self.points = pts
        self._gram = None

    @property
    def cardinality(self) -> int:
        return self.points.shape[0]

    def __len__(self) -> int:
        return self.cardinality

    @property
    def gram(self) -> np.ndarray:
        """Gram matrix of inner products, clipped into [-1, 1]; computed once."""
        if self._gram is None:
            g = self.points @ self.points.T
            np.clip(g, -1.0, 1.0, out=g)
            g.setflags(write=False)
            self._gram = g
        return self._gram

    def offdiagonal(self) -> np.ndarray:
        """All M(M-1) ordered off-diagonal inner products."""
        g = self.gram
        m = self.cardinality
        mask = ~np.eye(m, dtype=bool)
        return g[mask]

    def to_dict(self) -> dict:
        return {"dimension": self.dimension, "points": self.points.tolist()}


def moment(code: SphericalCode, i: int) -> float:
    """M_i(C) = sum over all ordered pairs of P_i^(n)(<x,y>); nonnegative."""
    if i < 1:
        raise ValueError(f"moment index must be >= 1, got {i}")
    off = code.offdiagonal()
    vals = gegenbauer_values(code.dimension, i, off)[i]
    return code.cardinality + float(np.sum(vals))


def per_point_moment(code: SphericalCode, i: int, y_index: int) -> float:
    """sum over x in C of P_i^(n)(<x, y>), x = y included (P_i(1) = 1)."""
    if i < 1:
        raise ValueError(f"moment index must be >= 1, got {i}")
    row = code.gram[y_index]
    vals = gegenbauer_values(code.dimension, i, row)[i]
    return float(np.sum(vals))


@dataclass
class DesignReport:
    """Outcome of a design check at a declared tolerance."""

    cardinality: int
    tolerance: float
    moments: dict[int, float]
    verdicts: dict[tuple[str, float], bool] = field(default_factory=dict)
    max_residual: float = 0.0

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self) -> dict:
        return {
            "cardinality": self.cardinality,
            "tolerance": self.tolerance,
            "moments": {str(i): v for i, v in sorted(self.moments.items())},
            "max_residual": self.max_residual,
            "verdicts": {f"{label} @ {tol:g}": ok for (label, tol), ok in self.verdicts.items()},
            "passed": self.passed,
        }


def is_design(code: SphericalCode, T, tol: float = 1e-9) -> DesignReport:
    """Check M_i(C) = 0 for all i in T, against the scale tol*|C|^2."""
    indices = sorted(set(int(i) for i in T))
    if not indices or indices[0] < 1:
        raise ValueError(f"T must be a nonempty set of indices >= 1, got {sorted(T)}")
    moments = {i: moment(code, i) for i in indices}
    residual = max(abs(v) for v in moments.values())
    label = "T-design T={" + ",".join(map(str, indices)) + "}"
    ok = residual <= tol * code.cardinality ** 2
    return DesignReport(
        cardinality=code.cardinality,
        tolerance=tol,
        moments=moments,
        verdicts={(label, tol): ok},
        max_residual=residual,
    )


def is_kk_design(code: SphericalCode, k: int, tol: float = 1e-9) -> DesignReport:
    """Check the even moments M_2, M_4, ..., M_2k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    report = is_design(code, range(2, 2 * k + 1, 2), tol)
    ((_, t), ok), = report.verdicts.items()
    report.verdicts = {(f"({k},{k})-design", t): ok}
    return report


def energy(code: SphericalCode, h: Potential) -> float:
    """h-energy: sum of h over all ordered off-diagonal inner products."""
    off = code.offdiagonal()
    if off.size and h(1.0) == math.inf and np.any(off >= 1.0 - 1e-12):
        raise InfiniteEnergyError("coincident points with a potential infinite at t = 1")
    values = [h(float(t)) for t in off]
    if any(math.isinf(v) for v in values):
        raise InfiniteEnergyError("potential infinite at an off-diagonal inner product")
    return math.fsum(values)


def _antipodal_pairs(code: SphericalCode) -> list[tuple[int, int]]:
    pts = code.points
    m = code.cardinality
    if m % 2 != 0:
        raise NotAntipodalError(f"odd cardinality {m} cannot be antipodal")
    pairs = []
    matched = [False] * m
    for i in range(m):
        if matched[i]:
            continue
        dists = np.linalg.norm(pts + pts[i], axis=1)
        hits = [j for j in range(m) if dists[j] <= ANTIPODAL_TOL]
        if not hits:
            raise NotAntipodalError(f"point {i} has no antipode in the code")
        if len(hits) > 1:
            raise NotAntipodalError(f"point {i} matches several near-antipodes {hits}; refusing to guess")
        j = hits[0]
        if matched[j]:
            raise NotAntipodalError(f"points {i} and {j} both match an already-paired antipode")
        matched[i] = matched[j] = True
        pairs.append((i, j))
    return pairs


def antipodal_halve(code: SphericalCode) -> SphericalCode:
    """One point from each antipodal pair (the lower-indexed one)."""
    pairs = _antipodal_pairs(code)
    keep = sorted(min(p) for p in pairs)
    return SphericalCode(code.dimension, code.points[keep])


def antipodal_double(code: SphericalCode) -> SphericalCode:
    """C united with -C; requires the two halves to be disjoint."""
    pts = code.points
    for i in range(code.cardinality):
        dists = np.linalg.norm(pts + pts[i], axis=1)
        hits = np.nonzero(dists <= ANTIPODAL_TOL)[0]
        if hits.size:
            raise OverlapError(f"points {i} and {int(hits[0])} are antipodal; C and -C overlap")
    return SphericalCode(code.dimension, np.vstack([pts, -pts]))


_GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0

_ICOSAHEDRON_HALF = [
    (0.0, 1.0, _GOLDEN),
    (0.0, -1.0, _GOLDEN),
    (1.0, _GOLDEN, 0.0),
    (-1.0, _GOLDEN, 0.0),
    (_GOLDEN, 0.0, 1.0),
    (-_GOLDEN, 0.0, 1.0),
]


def construct(name: str, n: int) -> SphericalCode:
    """Built-in configurations.

    orthonormal_basis(n), cross_polytope(n), icosahedron (n=3),
    icosahedron_half (n=3), regular_polygon (n = vertex count, on the
    circle in R^2).
    """
    if name == "orthonormal_basis":
        return SphericalCode(n, np.eye(n))
    if name == "cross_polytope":
        return SphericalCode(n, np.vstack([np.eye(n), -np.eye(n)]))
    if name == "icosahedron":
        if n != 3:
            raise ValueError("icosahedron lives in dimension 3")
        half = np.array(_ICOSAHEDRON_HALF)
        return SphericalCode(3, np.vstack([half, -half]), normalize=True)
    if name == "icosahedron_half":
        if n != 3:
            raise ValueError("icosahedron_half lives in dimension 3")
        return SphericalCode(3, np.array(_ICOSAHEDRON_HALF), normalize=True)
    if name == "regular_polygon":
        if n < 1:
            raise ValueError("regular_polygon needs at least one vertex")
        angles = 2.0 * math.pi * np.arange(n) / n
        return SphericalCode(2, np.column_stack([np.cos(angles), np.sin(angles)]))
    raise UnknownConstructionError(f"unknown construction {name!r}")


def fourth_moment_residual(code: SphericalCode, y_index: int) -> float:
    """[1 + sum_{x != y} <x,y>^4] - 3|C|/(n(n+2)); zero for (2,2)-designs.

    Only valid for n >= 3.
    """
    n = code.dimension
    if n < 3:
        raise ValueError("the fourth-moment identity requires dimension n >= 3")
    row = code.gram[y_index]
    s = math.fsum(float(t) ** 4 for j, t in enumerate(row) if j != y_index)
    return 1.0 + s - 3.0 * code.cardinality / (n * (n + 2))


def load_code(path, *, normalize: bool = False) -> SphericalCode:
    """Read a code from JSON: {"dimension": n, "points": [[...], ...]}."""
    data = json.loads(Path(path).read_text())
    try:
        dimension = int(data["dimension"])
        points = data["points"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed code file {path}: {exc}") from exc
    return SphericalCode(dimension, points, normalize=normalize)


def save_code(code: SphericalCode, path) -> None:
    Path(path).write_text(json.dumps(code.to_dict(), indent=2) + "\n")
