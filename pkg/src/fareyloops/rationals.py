"""Exact rationals with a point at infinity, plus the Farey-structure predicates.

Values are reduced fractions num/den with den >= 0.  The single point at
infinity is stored canonically as 1/0 and compares greater than every finite
rational.  Everything here is immutable and pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class Rational:
    """Reduced fraction; ``Rational(1, 0)`` is the point at infinity."""

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if den == 0:
            if num == 0:
                raise ZeroDivisionError("0/0 is not a rational value")
            num = 1  # canonical infinity, -1/0 folds onto 1/0
        else:
            if den < 0:
                num, den = -num, -den
            g = math.gcd(num, den)
            if g > 1:
                num //= g
                den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Rational is immutable")

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def as_fraction(self) -> Fraction:
        if self.den == 0:
            raise ValueError("infinity has no Fraction form")
        return Fraction(self.num, self.den)

    def scaled(self, n: int) -> "Rational":
        """n * self, reduced; infinity is fixed by scaling."""
        if self.den == 0:
            return self
        return Rational(n * self.num, self.den)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Rational(other)
        if not isinstance(other, Rational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __lt__(self, other):
        if isinstance(other, int):
            other = Rational(other)
        if not isinstance(other, Rational):
            return NotImplemented
        if self.den == 0:
            return False
        if other.den == 0:
            return True
        return self.num * other.den < other.num * self.den

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        if isinstance(other, (int, Rational)):
            return not self <= other
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (int, Rational)):
            return not self < other
        return NotImplemented

    def __neg__(self) -> "Rational":
        if self.den == 0:
            return self
        return Rational(-self.num, self.den)

    def __hash__(self):
        if self.den == 0:
            return hash(("rational-infinity",))
        return hash(Fraction(self.num, self.den))

    def __repr__(self):
        return f"Rational({self.num}, {self.den})"

    def __str__(self):
        return f"{self.num}/{self.den}"


INFINITY = Rational(1, 0)
ZERO = Rational(0, 1)
ONE = Rational(1, 1)


@dataclass(frozen=True)
class FareyEdge:
    """Unordered pair of distinct boundary points, stored with a < b."""

    a: Rational
    b: Rational

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("edge endpoints must differ")
        if self.b < self.a:
            a, b = self.a, self.b
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)

    @property
    def is_base(self) -> bool:
        """True for the edge I between 0 and infinity."""
        return self.a == ZERO and self.b == INFINITY

    def endpoints(self) -> tuple[Rational, Rational]:
        return (self.a, self.b)

    def __str__(self):
        return f"{self.a} -- {self.b}"


def farey_mediant(a: Rational, b: Rational) -> Rational:
    """Mediant (p+r)/(q+s) of two distinct points, reduced.

    For Farey neighbours the result is automatically in lowest terms and is a
    neighbour of both inputs.
    """
    if a == b:
        raise ValueError("mediant of a point with itself is undefined")
    return Rational(a.num + b.num, a.den + b.den)


def farey_difference(a: Rational, b: Rational) -> Rational:
    """Componentwise difference (p-r)/(q-s), reduced with canonical sign."""
    if a == b:
        raise ValueError("difference of a point with itself is degenerate")
    return Rational(a.num - b.num, a.den - b.den)


def is_farey_neighbor(a: Rational, b: Rational) -> bool:
    """True iff |p*s - q*r| = 1, i.e. the points share a tessellation edge."""
    return abs(a.num * b.den - b.num * a.den) == 1


def is_gamma0_neighbor(a: Rational, b: Rational, n: int) -> bool:
    """True iff {a, b} is an edge in the level-n congruence orbit of the base edge.

    Equivalent characterisation: the pair is a Farey edge and exactly one
    denominator is divisible by n.  (Both cannot be: consecutive denominators
    of a Farey edge are coprime.)  For n = 1 this degenerates to the plain
    Farey-neighbour predicate.
    """
    if n < 1:
        raise ValueError("modulus must be >= 1")
    if not is_farey_neighbor(a, b):
        return False
    if n == 1:
        return True
    return (a.den % n == 0) != (b.den % n == 0)


def is_dual_neighbor(a: Rational, b: Rational, n: int) -> bool:
    """True iff {a, b} is an edge of both the Farey tessellation and its 1/n scaling.

    Decided by the scaling characterisation: the pair must be a Farey edge and
    n*a, n*b (reduced) must again be a Farey edge.
    """
    if n < 1:
        raise ValueError("modulus must be >= 1")
    if not is_farey_neighbor(a, b):
        return False
    return is_farey_neighbor(a.scaled(n), b.scaled(n))
