"""Dense tableau simplex for min c.x s.t. A x <= b, x >= 0 (with b >= 0).

The slack basis is feasible, so no phase-one is needed.  Entering variables
follow Bland's rule (smallest index with negative reduced cost), which
keeps the iteration deterministic and avoids cycling; the leaving row uses
a two-pass ratio test that prefers the numerically largest pivot among
near-tied rows (smallest basis index as the final tie-break).  The tableau
is refactorized from the original data at a fixed cadence and before
declaring optimality, and a solve that still manages to lose feasibility is
restarted once with a stricter pivot threshold.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["UnboundedError", "SimplexResult", "solve_min"]

RC_TOL = 1e-9
RATIO_TIE = 1e-9
REFACTOR_EVERY = 25
FEAS_TOL = 1e-7


class UnboundedError(RuntimeError):
    """The LP has unbounded optimum."""


class _NumericalInstability(RuntimeError):
    pass


@dataclass
class SimplexResult:
    x: np.ndarray
    objective: float
    iterations: int


def _canonical(a_ext: np.ndarray, b: np.ndarray, c_ext: np.ndarray, basis: list[int]) -> np.ndarray:
    """Tableau for the given basis recomputed from the original data."""
    try:
        body = np.linalg.solve(a_ext[:, basis], np.hstack([a_ext, b[:, None]]))
    except np.linalg.LinAlgError as exc:
        raise _NumericalInstability(f"singular basis: {exc}") from exc
    if body[:, -1].min() < -FEAS_TOL:
        raise _NumericalInstability(f"basis infeasible by {body[:, -1].min():.3e}")
    body[:, -1] = np.maximum(body[:, -1], 0.0)
    cost = np.concatenate([c_ext, [0.0]]) - c_ext[basis] @ body
    return np.vstack([body, cost])


def _entering(rc: np.ndarray) -> int:
    for j in range(rc.shape[0]):
        if rc[j] < -RC_TOL:
            return j
    return -1


def _leaving(tab: np.ndarray, basis: list[int], entering: int, m: int, pivot_tol: float) -> int:
    col = tab[:m, entering]
    rhs = np.maximum(tab[:m, -1], 0.0)  # clamp float dust
    best = None
    for r in range(m):
        if col[r] > pivot_tol:
            ratio = rhs[r] / col[r]
            if best is None or ratio < best:
                best = ratio
    if best is None:
        return -1
    # among near-ties pick the numerically fattest pivot (tiny pivots
    # amplify roundoff catastrophically); exact ties fall back to the
    # smallest basis variable index
    cutoff = best + RATIO_TIE * (1.0 + abs(best))
    leaving = -1
    for r in range(m):
        if col[r] > pivot_tol and rhs[r] / col[r] <= cutoff:
            if leaving < 0 or col[r] > col[leaving] or (col[r] == col[leaving] and basis[r] < basis[leaving]):
                leaving = r
    return leaving


def _run(c: np.ndarray, A: np.ndarray, b: np.ndarray, pivot_tol: float, max_iter: int) -> SimplexResult:
    m, n = A.shape
    a_ext = np.hstack([A, np.eye(m)])
    c_ext = np.concatenate([c, np.zeros(m)])
    basis = list(range(n, n + m))
    tab = _canonical(a_ext, b, c_ext, basis)
    since_refactor = 0
    it = 0
    while it < max_iter:
        entering = _entering(tab[m, :-1])
        if entering < 0:
            # confirm on a fresh tableau; drift may hide an improving column
            tab = _canonical(a_ext, b, c_ext, basis)
            since_refactor = 0
            entering = _entering(tab[m, :-1])
            if entering < 0:
                x = np.zeros(n + m)
                for r, var in enumerate(basis):
                    x[var] = tab[r, -1]
                return SimplexResult(x[:n], float(c_ext @ x), it)
        leaving = _leaving(tab, basis, entering, m, pivot_tol)
        if leaving < 0:
            # rule out reduced-cost dust before declaring unboundedness
            tab = _canonical(a_ext, b, c_ext, basis)
            since_refactor = 0
            if tab[m, entering] >= -RC_TOL:
                continue
            leaving = _leaving(tab, basis, entering, m, pivot_tol)
            if leaving < 0:
                raise UnboundedError(f"column {entering} has no blocking constraint")
        piv = tab[leaving, entering]
        tab[leaving] /= piv
        for r in range(m + 1):
            if r != leaving and tab[r, entering] != 0.0:
                tab[r] -= tab[r, entering] * tab[leaving]
        basis[leaving] = entering
        it += 1
        since_refactor += 1
        if since_refactor >= REFACTOR_EVERY:
            tab = _canonical(a_ext, b, c_ext, basis)
            since_refactor = 0
    raise RuntimeError(f"simplex did not terminate within {max_iter} iterations")


def solve_min(c, A, b, *, max_iter: int = 20000) -> SimplexResult:
    c = np.asarray(c, dtype=float)
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    if np.any(b < 0):
        raise ValueError("solve_min requires b >= 0 (slack basis must be feasible)")
    for pivot_tol in (1e-11, 1e-8, 1e-6):
        try:
            return _run(c, A, b, pivot_tol, max_iter)
        except _NumericalInstability:
            continue
    raise RuntimeError("simplex unstable at every pivot threshold")
