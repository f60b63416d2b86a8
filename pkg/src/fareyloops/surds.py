"""Exact quadratic irrationals (P + sqrt(D))/Q.

The value domain for eventually periodic continued fractions.  D is a
positive non-square; the representation is normalised so that Q divides
D - P*P, which keeps the expansion recurrence integral.  Comparisons against
rationals, integer shifts/scalings and reciprocals are all exact.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .rationals import Rational


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


class QuadSurd:
    """Value (P + sqrt(D))/Q with D > 0 non-square and Q | D - P^2."""

    __slots__ = ("P", "Q", "D")

    def __init__(self, P: int, Q: int, D: int):
        if Q == 0:
            raise ZeroDivisionError("surd denominator must be nonzero")
        if D <= 0 or is_square(D):
            raise ValueError("D must be a positive non-square (use Rational otherwise)")
        if (D - P * P) % Q != 0:
            s = abs(Q)
            P, Q, D = P * s, Q * s, D * s * s
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "D", D)

    def __setattr__(self, name, value):
        raise AttributeError("QuadSurd is immutable")

    # The pair (rational part, signed radical part) determines the value, so
    # equality and hashing avoid any integer factorisation.
    def _key(self):
        sign = 1 if self.Q > 0 else -1
        return (Fraction(self.P, self.Q), sign, Fraction(self.D, self.Q * self.Q))

    def __eq__(self, other):
        if not isinstance(other, QuadSurd):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def shifted(self, k: int) -> "QuadSurd":
        """self + k."""
        return QuadSurd(self.P + k * self.Q, self.Q, self.D)

    def scaled(self, n: int) -> "QuadSurd":
        """n * self for n >= 1."""
        if n < 1:
            raise ValueError("scale factor must be >= 1")
        return QuadSurd(n * self.P, self.Q, n * n * self.D)

    def reciprocal(self) -> "QuadSurd":
        """1 / self; stays normalised because Q | D - P^2."""
        return QuadSurd(-self.P, (self.D - self.P * self.P) // self.Q, self.D)

    def floor(self) -> int:
        s = math.isqrt(self.D)  # s < sqrt(D) < s + 1, strictly (D non-square)
        if self.Q > 0:
            return (self.P + s) // self.Q
        return -((self.P + s) // (-self.Q)) - 1

    def _cmp_rational(self, num: int, den: int) -> int:
        """Sign of self - num/den for den > 0."""
        a = self.P * den - num * self.Q
        c = self.Q * den
        # self - num/den = (a + den*sqrt(D)) / c with den > 0
        if a >= 0:
            radical_sign = 1
        else:
            radical_sign = 1 if den * den * self.D > a * a else -1
        return radical_sign if c > 0 else -radical_sign

    def __lt__(self, other):
        if isinstance(other, int):
            other = Rational(other)
        if isinstance(other, Rational):
            if other.is_infinite:
                return True
            return self._cmp_rational(other.num, other.den) < 0
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, int):
            other = Rational(other)
        if isinstance(other, Rational):
            if other.is_infinite:
                return False
            return self._cmp_rational(other.num, other.den) > 0
        return NotImplemented

    def __le__(self, other):
        return self < other  # never equal to a rational

    def __ge__(self, other):
        return self > other

    def is_positive(self) -> bool:
        return self._cmp_rational(0, 1) > 0

    def __repr__(self):
        return f"QuadSurd({self.P}, {self.Q}, {self.D})"

    def __str__(self):
        return f"({self.P}+sqrt({self.D}))/{self.Q}"
