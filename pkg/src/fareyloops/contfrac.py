"""Continued fractions over exact values.

A CFExpansion is one of
  - finite               [a0; a1, ..., am]
  - finite with oo-tail  [a0; a1, ..., am, oo]   (rational convention)
  - eventually periodic  [a0; b1, ..., bk, (p1, ..., pj)]

Periodic expansions are stored with minimal period and minimal preperiod so
that equality of expansions is plain structural equality.  The oo-tail flag
records whether the rational convention (a final partial quotient of size
infinity) is active; height and loop decisions honour it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .rationals import INFINITY, Rational
from .surds import QuadSurd, is_square

Value = Union[Rational, QuadSurd]


def _minimal_period(period: tuple[int, ...]) -> tuple[int, ...]:
    k = len(period)
    for d in range(1, k + 1):
        if k % d == 0 and period == period[:d] * (k // d):
            return period[:d]
    return period


@dataclass(frozen=True)
class CFExpansion:
    a0: int
    body: tuple[int, ...] = ()
    period: Optional[tuple[int, ...]] = None
    inf_tail: bool = False

    def __post_init__(self):
        object.__setattr__(self, "body", tuple(self.body))
        if self.a0 < 0:
            raise ValueError("leading term must be nonnegative")
        if any(a < 1 for a in self.body):
            raise ValueError("partial quotients after a0 must be >= 1")
        if self.period is not None:
            if self.inf_tail:
                raise ValueError("a periodic expansion cannot carry an oo-tail")
            period = tuple(self.period)
            if not period:
                raise ValueError("period must be nonempty")
            if any(a < 1 for a in period):
                raise ValueError("period entries must be >= 1")
            period = _minimal_period(period)
            body = list(self.body)
            while body and body[-1] == period[-1]:
                body.pop()
                period = (period[-1],) + period[:-1]
            object.__setattr__(self, "body", tuple(body))
            object.__setattr__(self, "period", period)

    @property
    def is_periodic(self) -> bool:
        return self.period is not None

    @property
    def is_finite(self) -> bool:
        return self.period is None

    @property
    def last_index(self) -> int:
        """Index of the final partial quotient of a finite expansion."""
        if not self.is_finite:
            raise ValueError("periodic expansions have no final index")
        return len(self.body)

    def entry(self, i: int) -> int:
        """Partial quotient a_i (period unrolled as needed)."""
        if i < 0:
            raise IndexError("entry index must be >= 0")
        if i == 0:
            return self.a0
        j = i - 1
        if j < len(self.body):
            return self.body[j]
        if self.period is not None:
            return self.period[(j - len(self.body)) % len(self.period)]
        raise IndexError(f"finite expansion has no entry a_{i}")

    def entries(self, count: int) -> list[int]:
        return [self.entry(i) for i in range(count)]

    def __str__(self):
        return format_cf(self)


def format_cf(e: CFExpansion) -> str:
    """Render as ``[a0; a1, a2, ...]`` with ``(...)`` period and ``oo`` tail."""
    parts = [str(a) for a in e.body]
    if e.period is not None:
        parts.append("(" + ", ".join(str(a) for a in e.period) + ")")
    if e.inf_tail:
        parts.append("oo")
    if not parts:
        return f"[{e.a0}]"
    return f"[{e.a0}; " + ", ".join(parts) + "]"


def parse_cf(text: str) -> CFExpansion:
    """Inverse of format_cf; round-trips exactly."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"not an expansion: {text!r}")
    s = s[1:-1].strip()
    head, _, rest = s.partition(";")
    a0 = int(head.strip())
    body: list[int] = []
    period: Optional[tuple[int, ...]] = None
    inf_tail = False
    rest = rest.strip()
    if rest:
        depth = 0
        tokens, cur = [], ""
        for ch in rest:
            if ch == "," and depth == 0:
                tokens.append(cur.strip())
                cur = ""
            else:
                if ch == "(":
                    depth += 1
                elif ch == ")":
                    depth -= 1
                cur += ch
        tokens.append(cur.strip())
        for tok in tokens:
            if not tok:
                raise ValueError(f"empty token in {text!r}")
            if tok == "oo":
                inf_tail = True
            elif tok.startswith("("):
                if not tok.endswith(")"):
                    raise ValueError(f"unbalanced period in {text!r}")
                period = tuple(int(t.strip()) for t in tok[1:-1].split(","))
            else:
                if period is not None or inf_tail:
                    raise ValueError(f"entries after tail in {text!r}")
                body.append(int(tok))
    return CFExpansion(a0, tuple(body), period, inf_tail)


# ---------------------------------------------------------------------------
# construction from values


def cf_from_rational(x) -> tuple[CFExpansion, CFExpansion]:
    """Both expansions of a finite rational x >= 0, each carrying the oo-tail.

    Returns (canonical, twin): the canonical form does not end in 1, the twin
    ends in 1.  The value 0 admits only [0] under a nonnegative leading term;
    it is returned for both slots.
    """
    if isinstance(x, Rational):
        if x.is_infinite:
            raise ValueError("cannot expand the point at infinity")
        num, den = x.num, x.den
    elif isinstance(x, Fraction):
        num, den = x.numerator, x.denominator
    elif isinstance(x, int):
        num, den = x, 1
    else:
        raise TypeError(f"cannot expand {x!r}")
    if num < 0:
        raise ValueError("expansion requires x >= 0")

    entries = []
    while den:
        a, rem = divmod(num, den)
        entries.append(a)
        num, den = den, rem
    canonical = CFExpansion(entries[0], tuple(entries[1:]), None, True)
    if len(entries) == 1:
        if entries[0] == 0:
            return canonical, canonical
        twin_entries = [entries[0] - 1, 1]
    else:
        twin_entries = entries[:-1] + [entries[-1] - 1, 1]
        if twin_entries[-2] == 0:  # last quotient was 1 only in the integer case
            raise AssertionError("Euclid produced a trailing 1")
    twin = CFExpansion(twin_entries[0], tuple(twin_entries[1:]), None, True)
    return canonical, twin


def twin_of(e: CFExpansion) -> CFExpansion:
    """The other finite expansion of the same rational value."""
    if not e.is_finite:
        raise ValueError("only rationals have twin expansions")
    entries = [e.a0, *e.body]
    if entries[-1] == 1 and len(entries) >= 2:
        entries = entries[:-2] + [entries[-2] + 1]
    else:
        if entries[-1] == 0:
            raise ValueError("0 has a single expansion")
        entries = entries[:-1] + [entries[-1] - 1, 1]
    return CFExpansion(entries[0], tuple(entries[1:]), None, e.inf_tail)


# ---------------------------------------------------------------------------
# convergents and semi-convergents


def convergent_pair(e: CFExpansion, k: int) -> tuple[int, int]:
    """(p_k, q_k) by the seeded recurrence; k >= -1."""
    if k < -1:
        raise IndexError("convergent index must be >= -1")
    p_prev, q_prev = 1, 0
    if k == -1:
        return p_prev, q_prev
    p, q = e.a0, 1
    for i in range(1, k + 1):
        a = e.entry(i)
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    return p, q


def convergent(e: CFExpansion, k: int) -> Rational:
    """The k-th convergent p_k/q_k."""
    p, q = convergent_pair(e, k)
    return Rational(p, q)


def convergents(e: CFExpansion, upto: Optional[int] = None) -> list[Rational]:
    """Convergents p_k/q_k for k = -1 .. upto (full expansion if finite)."""
    if upto is None:
        if not e.is_finite:
            raise ValueError("an infinite expansion needs an explicit bound")
        upto = e.last_index
    out = [INFINITY]
    if upto < 0:
        return out
    p_prev, q_prev = 1, 0
    p, q = e.a0, 1
    out.append(Rational(p, q))
    for i in range(1, upto + 1):
        a = e.entry(i)
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        out.append(Rational(p, q))
    return out


def cf_eval(e: CFExpansion, depth: Optional[int] = None) -> Rational:
    """Exact value of the expansion truncated after a_depth (depth = -1 gives 1/0)."""
    if depth is None:
        if not e.is_finite:
            raise ValueError("an infinite expansion needs a truncation depth")
        depth = e.last_index
    if depth < -1:
        raise IndexError("depth must be >= -1")
    if e.is_finite and depth > e.last_index:
        raise IndexError(f"expansion has no entry a_{depth}")
    return convergent(e, depth)


def semiconvergent(e: CFExpansion, k: int, m: int) -> Rational:
    """The {k, m}-th semi-convergent (m*p_k + p_{k-1}) / (m*q_k + q_{k-1}).

    Interior fans require 0 <= m <= a_{k+1}; on the oo-tail fan of a finite
    expansion (k equal to the final index) any m >= 0 is allowed.  With the
    seeds p_{-1} = 1, q_{-1} = 0 the signed determinant against the pivot is
    p_{k,m} * q_k - p_k * q_{k,m} = (-1)^k, independent of m.
    """
    if k < 0:
        raise IndexError("semi-convergent index must be >= 0")
    if m < 0:
        raise ValueError("m must be >= 0")
    if e.is_finite and k > e.last_index:
        raise IndexError(f"expansion has no fan at k={k}")
    if e.is_finite and k == e.last_index:
        if not e.inf_tail:
            raise IndexError("final fan requires the oo-tail convention")
    else:
        bound = e.entry(k + 1)
        if m > bound:
            raise ValueError(f"m={m} outside fan bound a_{k + 1}={bound}")
    p_prev, q_prev = convergent_pair(e, k - 1)
    p, q = convergent_pair(e, k)
    return Rational(m * p + p_prev, m * q + q_prev)


def height(e: CFExpansion) -> Union[int, float]:
    """Largest partial quotient a_k for k >= 1 (a0 excluded).

    Infinite for oo-tail expansions; for an integer expansion without the
    tail the supremum over the empty set is reported as 0.
    """
    if e.inf_tail:
        return math.inf
    if e.period is not None:
        return max(max(e.body, default=0), max(e.period))
    return max(e.body, default=0)


# ---------------------------------------------------------------------------
# exact values of expansions


def cf_value(e: CFExpansion) -> Value:
    """Exact value: a Rational for finite input, a QuadSurd for periodic."""
    if e.is_finite:
        return cf_eval(e)
    return _surd_of_periodic(e)


def _surd_of_periodic(e: CFExpansion) -> QuadSurd:
    # y = [p1; p2, ..., pk, y] = (a*y + b)/(c*y + d), the matrix product of
    # [[p_i, 1], [1, 0]] taken left to right
    a, b = 1, 0
    c, d = 0, 1
    for entry in e.period:
        a, b, c, d = a * entry + b, a, c * entry + d, c
    # positive root of c*y^2 + (d - a)*y - b = 0
    disc = (a - d) * (a - d) + 4 * b * c
    y = QuadSurd(a - d, 2 * c, disc)
    for entry in reversed((e.a0, *e.body)):
        y = y.reciprocal().shifted(entry)
    return y


def cf_of_surd(s: QuadSurd) -> CFExpansion:
    """Eventually periodic expansion of a positive quadratic irrational.

    The classical integral recurrence on (P, Q) states; the first repeated
    state closes the period and the constructor normalises to the canonical
    minimal form.
    """
    if not s.is_positive():
        raise ValueError("expansion requires a positive value")
    entries: list[int] = []
    seen: dict[tuple[int, int], int] = {}
    P, Q, D = s.P, s.Q, s.D
    while (P, Q) not in seen:
        seen[(P, Q)] = len(entries)
        a = QuadSurd(P, Q, D).floor()
        entries.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    start = seen[(P, Q)]
    if start == 0:
        # a0 is formally part of the cycle; keep it as the leading term and
        # let the canonicaliser minimise the preperiod of the rest
        period = tuple(entries[1:]) + (entries[0],)
        return CFExpansion(entries[0], (), period)
    return CFExpansion(entries[0], tuple(entries[1:start]), tuple(entries[start:]))


# ---------------------------------------------------------------------------
# arithmetic on expansions


def multiply_cf(e: CFExpansion, n: int) -> CFExpansion:
    """Expansion of n * value(e), computed exactly through the value domain."""
    if n < 1:
        raise ValueError("multiplier must be >= 1")
    if n == 1:
        return e
    if e.is_finite:
        x = cf_eval(e).scaled(n)
        canonical, _ = cf_from_rational(x)
        return CFExpansion(canonical.a0, canonical.body, None, e.inf_tail)
    return cf_of_surd(_surd_of_periodic(e).scaled(n))


def shift_cf(e: CFExpansion, k: int) -> CFExpansion:
    """Expansion of value(e) + k; only the leading term changes."""
    if e.a0 + k < 0:
        raise ValueError("shift would make the leading term negative")
    return CFExpansion(e.a0 + k, e.body, e.period, e.inf_tail)
