"""Exact real-root machinery: Sturm sequences, isolation, bisection.

Everything here decides signs with integer arithmetic (coefficients are
cleared to integers, evaluation points are rationals), so root counts,
isolating intervals, and nonnegativity verdicts are exact.  Floats appear
only in the convenience approximations attached to results.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator

from .polynomials import Polynomial, T

__all__ = [
    "RootLocation",
    "sturm_sequence",
    "count_distinct_roots",
    "isolate_distinct_roots",
    "refine_bracket",
    "is_nonnegative_on",
    "minimum_on_interval",
]


def _sign_at(int_coeffs: list[int], t: Fraction) -> int:
    """Sign of sum a_j t^j via homogenized integer Horner; exact."""
    num, den = t.numerator, t.denominator
    acc = int_coeffs[-1]
    dp = 1
    for c in reversed(int_coeffs[:-1]):
        dp *= den
        acc = acc * num + c * dp
    return (acc > 0) - (acc < 0)


def _primitive(p: Polynomial) -> list[int]:
    cs = p.integer_coeffs()
    g = 0
    for c in cs:
        g = gcd(g, abs(c))
    if g > 1:
        cs = [c // g for c in cs]
    return cs


def sturm_sequence(p: Polynomial) -> list[list[int]]:
    """Sturm sequence of ``p`` as primitive integer coefficient lists.

    Members are rescaled by positive constants only, which leaves sign
    variations intact.  Works for non-squarefree input too (counts then
    refer to distinct roots).
    """
    if p.is_zero:
        raise ValueError("Sturm sequence of the zero polynomial")
    seq_polys = [p, p.derivative()]
    while not seq_polys[-1].is_zero:
        rem = seq_polys[-2].divmod(seq_polys[-1])[1]
        if rem.is_zero:
            break
        seq_polys.append(-rem)
    return [_primitive(q) for q in seq_polys if not q.is_zero]


def _variations(seq: list[list[int]], t: Fraction) -> int:
    signs = [s for s in (_sign_at(cs, t) for cs in seq) if s != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x * y < 0)


def count_distinct_roots(p: Polynomial, a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval (a, b]."""
    if a >= b:
        return 0
    seq = sturm_sequence(p)
    return _variations(seq, a) - _variations(seq, b)


@dataclass(frozen=True)
class RootLocation:
    """One distinct real root: an exact rational or an isolating interval.

    For interval roots, p changes has exactly one distinct root strictly
    inside (lo, hi) and p(lo), p(hi) are nonzero.
    """

    lo: Fraction
    hi: Fraction
    exact: Fraction | None = None

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def approx(self) -> float:
        if self.exact is not None:
            return float(self.exact)
        return float((self.lo + self.hi) / 2)

    @property
    def width(self) -> Fraction:
        if self.exact is not None:
            return Fraction(0)
        return self.hi - self.lo


def _split_candidates(lo: Fraction, hi: Fraction) -> Iterator[Fraction]:
    # dyadic points of increasing depth, strictly inside (lo, hi)
    depth = 2
    while True:
        for num in range(1, depth, 2):
            yield lo + (hi - lo) * Fraction(num, depth)
        depth *= 2


def _pick_nonroot(int_coeffs: list[int], lo: Fraction, hi: Fraction) -> Fraction:
    for cand in _split_candidates(lo, hi):
        if _sign_at(int_coeffs, cand) != 0:
            return cand
    raise AssertionError("unreachable: polynomial has finitely many roots")


def _isolate_on(u: Polynomial, p_ints: list[int], a: Fraction, b: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for all distinct roots of squarefree ``u`` in (a, b).

    Requires u(a) != 0 and u(b) != 0.  Splits only at points where the
    original polynomial (integer coeffs ``p_ints``) is nonzero, so returned
    boundaries are always sign-definite for it as well.
    """
    seq = sturm_sequence(u)
    va, vb = _variations(seq, a), _variations(seq, b)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(a, va, b, vb)]
    while stack:
        lo, vlo, hi, vhi = stack.pop()
        count = vlo - vhi
        if count == 0:
            continue
        if count == 1:
            lo2, hi2 = lo, hi
            # shrink until both boundaries are sign-definite for p itself
            while _sign_at(p_ints, lo2) == 0 or _sign_at(p_ints, hi2) == 0:
                m = _pick_nonroot(p_ints, lo2, hi2)
                if _variations(seq, lo2) - _variations(seq, m) == 1:
                    hi2 = m
                else:
                    lo2 = m
            out.append((lo2, hi2))
            continue
        m = _pick_nonroot(p_ints, lo, hi)
        vm = _variations(seq, m)
        stack.append((lo, vlo, m, vm))
        stack.append((m, vm, hi, vhi))
    out.sort()
    return out


def isolate_distinct_roots(p: Polynomial, a: Fraction = Fraction(-1), b: Fraction = Fraction(1)) -> list[RootLocation]:
    """All distinct real roots of ``p`` in the open interval (a, b), sorted.

    Rational roots at 0 are detected exactly; other roots come as isolating
    intervals whose endpoints are not roots of ``p``.
    """
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    a, b = Fraction(a), Fraction(b)
    if p.degree == 0 or a >= b:
        return []
    u = p.squarefree_part()
    # strip endpoint roots so Sturm evaluations at a, b are sign-definite
    for r in (a, b):
        while u(r) == 0:
            u = u.divmod(Polynomial([-r, 1]))[0]
    roots: list[RootLocation] = []
    zero = Fraction(0)
    p_ints = p.integer_coeffs()
    if a < zero < b and u(zero) == 0:
        roots.append(RootLocation(zero, zero, exact=zero))
        u = u.divmod(T)[0]
        ranges = [(a, zero), (zero, b)]
    else:
        ranges = [(a, b)]
    if u.degree >= 1:
        for lo, hi in ranges:
            for ival in _isolate_on(u, p_ints, lo, hi):
                roots.append(RootLocation(ival[0], ival[1]))
    roots.sort(key=lambda r: (r.lo, r.hi))
    return roots


def refine_bracket(p: Polynomial, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect a sign-change bracket of ``p`` down to the requested width."""
    ints = p.integer_coeffs()
    slo, shi = _sign_at(ints, lo), _sign_at(ints, hi)
    if slo == 0 or shi == 0 or slo == shi:
        raise ValueError("refine_bracket requires a strict sign change")
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = _sign_at(ints, mid)
        if sm == 0:
            # rational root hit exactly; collapse to a tight bracket around it
            eps = (hi - lo) / 4
            if eps > width / 2:
                eps = width / 2
            return (mid - eps, mid + eps)
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def refine_root(p: Polynomial, loc: RootLocation, width: Fraction) -> RootLocation:
    """Shrink a root location to the requested interval width."""
    if loc.is_exact or loc.width <= width:
        return loc
    lo, hi = refine_bracket(p, loc.lo, loc.hi, width)
    return RootLocation(lo, hi)


def is_nonnegative_on(p: Polynomial, a: Fraction = Fraction(-1), b: Fraction = Fraction(1)) -> tuple[bool, float | None]:
    """Exact decision of ``p(t) >= 0`` for all t in [a, b].

    Returns (verdict, witness) where witness is a point with p < 0 when the
    verdict is negative.  Touching zeros (even-order roots) pass.
    """
    a, b = Fraction(a), Fraction(b)
    if p.is_zero:
        return True, None
    va, vb = p(a), p(b)
    if va < 0:
        return False, float(a)
    if vb < 0:
        return False, float(b)
    if p.degree == 0:
        return True, None
    samples = []
    if va != 0:
        samples.append(a)
    if vb != 0:
        samples.append(b)
    for loc in isolate_distinct_roots(p, a, b):
        if not loc.is_exact:
            samples.extend((loc.lo, loc.hi))
    if not samples:
        # roots only at the endpoints: sign is constant strictly inside
        samples.append(_pick_nonroot(p.integer_coeffs(), a, b))
    for s in samples:
        if p(s) < 0:
            return False, float(s)
    return True, None


def minimum_on_interval(
    p: Polynomial,
    a: Fraction = Fraction(-1),
    b: Fraction = Fraction(1),
    crit_width: Fraction = Fraction(1, 10**13),
) -> tuple[Fraction, float, float]:
    """Rigorous minimum data for ``p`` on [a, b] with [a, b] within [-1, 1].

    Returns (lower_bound, best_value, argmin): ``lower_bound`` is an exact
    rational with p(t) >= lower_bound everywhere on [a, b]; ``best_value``
    and ``argmin`` are the float value/location of the smallest candidate
    (endpoints and critical points).
    """
    a, b = Fraction(a), Fraction(b)
    if abs(a) > 1 or abs(b) > 1:
        raise ValueError("minimum_on_interval assumes [a, b] within [-1, 1]")
    candidates: list[tuple[Fraction, Fraction]] = [(a, p(a)), (b, p(b))]
    lower = min(c[1] for c in candidates)
    deriv = p.derivative()
    if not deriv.is_zero and deriv.degree >= 1:
        slope_bound = deriv.coeff_norm()
        for loc in isolate_distinct_roots(deriv, a, b):
            if loc.is_exact:
                t = loc.exact
                candidates.append((t, p(t)))
                lower = min(lower, p(t))
            else:
                loc = refine_root(deriv, loc, crit_width)
                vlo, vhi = p(loc.lo), p(loc.hi)
                pick = (loc.lo, vlo) if vlo <= vhi else (loc.hi, vhi)
                candidates.append(pick)
                lower = min(lower, min(vlo, vhi) - loc.width * slope_bound)
    arg, best = min(candidates, key=lambda c: c[1])
    return lower, float(best), float(arg)
