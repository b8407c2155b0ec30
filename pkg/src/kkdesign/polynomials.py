"""Exact univariate polynomials over the rationals.

Coefficients are `fractions.Fraction` values stored constant-term first.
All construction and ring arithmetic is exact; evaluation keeps the numeric
kind of its input (Fraction/int in, Fraction out; float in, float out).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]
Numeric = Union[int, float, Fraction]

__all__ = ["Polynomial", "ZERO", "ONE", "T"]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        # floats convert exactly (binary rationals); callers that want a
        # decimal reading should pass a string instead
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class Polynomial:
    """Immutable polynomial with exact rational coefficients.

    The trailing coefficient is nonzero unless the polynomial is identically
    zero (stored as a single zero coefficient).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [_as_fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0 and self.degree > 0:
                continue
            if j == 0:
                terms.append(str(c))
            elif j == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{j}")
        return "Polynomial(" + " + ".join(terms) + ")"

    # -- ring arithmetic -----------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for j, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for l, b in enumerate(other.coeffs):
                out[j + l] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Polynomial":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return Polynomial([c / scalar for c in self.coeffs])

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    @staticmethod
    def _coerce(other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return NotImplemented

    # -- calculus and evaluation ----------------------------------------

    def derivative(self) -> "Polynomial":
        if self.degree == 0:
            return ZERO
        return Polynomial([j * c for j, c in enumerate(self.coeffs)][1:])

    def __call__(self, t: Numeric) -> Numeric:
        """Horner evaluation; exact when `t` is exact."""
        if isinstance(t, float):
            acc = 0.0
            for c in reversed(self.coeffs):
                acc = acc * t + float(c)
            return acc
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    # -- euclidean structure ---------------------------------------------

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        dd = len(div) - 1
        lead = div[-1]
        if len(rem) - 1 < dd:
            return ZERO, self
        quo = [Fraction(0)] * (len(rem) - dd)
        for j in range(len(rem) - 1, dd - 1, -1):
            c = rem[j] / lead
            quo[j - dd] = c
            if c:
                for l in range(dd + 1):
                    rem[j - dd + l] -= c * div[l]
        return Polynomial(quo), Polynomial(rem[:dd])

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a.divmod(b)[1]
        if a.is_zero:
            return a
        return a / a.coeffs[-1]

    def squarefree_part(self) -> "Polynomial":
        """Largest squarefree divisor (same distinct roots, all simple)."""
        if self.degree == 0:
            return self
        g = self.gcd(self.derivative())
        if g.degree == 0:
            return self
        quo, rem = self.divmod(g)
        assert rem.is_zero
        return quo

    # -- misc -------------------------------------------------------------

    def parity(self) -> int | None:
        """0 if even function, 1 if odd, None if neither (zero counts as both -> 0)."""
        even = all(c == 0 for j, c in enumerate(self.coeffs) if j % 2 == 1)
        odd = all(c == 0 for j, c in enumerate(self.coeffs) if j % 2 == 0)
        if even:
            return 0
        if odd:
            return 1
        return None

    def coeff_norm(self) -> Fraction:
        """Sum of absolute coefficient values; bounds |p(t)| on [-1, 1]."""
        return sum((abs(c) for c in self.coeffs), Fraction(0))

    def integer_coeffs(self) -> list[int]:
        """Coefficients scaled by the common denominator (positive factor)."""
        from math import lcm

        den = lcm(*(c.denominator for c in self.coeffs))
        return [int(c * den) for c in self.coeffs]

    def coeff_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, strings: Sequence[str]) -> "Polynomial":
        return cls([Fraction(s) for s in strings])


ZERO = Polynomial([0])
ONE = Polynomial([1])
T = Polynomial([0, 1])
