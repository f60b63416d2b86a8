"""Infinite-loop decisions mod n.

A positive real is an infinite loop mod n when no semi-convergent denominator
(the seed q_{-1} = 0 excepted) is divisible by n; for rationals the oo-tail
convention supplies the two final arithmetic progressions of denominators.
The decision is exact for finite and periodic expansions; truncated digit
streams can only ever refute, never confirm.

Existence of loops mod n is decided on a finite state graph: a walk down the
mediant tree only sees the pair of interval-endpoint denominators mod n, and
a step is pruned exactly when it would create a denominator divisible by n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Union

from .contfrac import CFExpansion, cf_eval, cf_from_rational, twin_of
from .rationals import Rational
from .surds import QuadSurd

DEFAULT_STREAM_DEPTH = 10_000

LOOP = "LOOP"
NOTLOOP = "NOTLOOP"
UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class LoopVerdict:
    kind: str
    witness_k: Optional[int] = None
    witness_m: Optional[int] = None
    witness: Optional[Rational] = None
    depth: Optional[int] = None

    @classmethod
    def loop(cls) -> "LoopVerdict":
        return cls(LOOP)

    @classmethod
    def not_loop(cls, k: int, m: int, value: Rational) -> "LoopVerdict":
        return cls(NOTLOOP, witness_k=k, witness_m=m, witness=value)

    @classmethod
    def unknown(cls, depth: int) -> "LoopVerdict":
        return cls(UNKNOWN, depth=depth)

    @property
    def is_loop(self) -> bool:
        return self.kind == LOOP

    def record(self) -> str:
        """Single-line serialisation."""
        if self.kind == LOOP:
            return "LOOP"
        if self.kind == NOTLOOP:
            return f"NOTLOOP k={self.witness_k} m={self.witness_m} q={self.witness.den}"
        return f"UNKNOWN depth={self.depth}"


class ModState(NamedTuple):
    """Pair of consecutive denominators reduced mod n."""

    u: int
    v: int


def _fan_hit(u: int, v: int, n: int, bound: Optional[int], min_m: int) -> Optional[int]:
    """Smallest m with min_m <= m (<= bound) and u + m*v divisible by n, else None."""
    u %= n
    v %= n
    g = math.gcd(v, n)
    if u % g:
        return None
    nn = n // g
    m0 = (-(u // g) * pow(v // g, -1, nn)) % nn if nn > 1 else 0
    if m0 < min_m:
        m0 += ((min_m - m0 + nn - 1) // nn) * nn
    if bound is not None and m0 > bound:
        return None
    return m0


def _finite_witness(entries: list[int], inf_tail: bool, n: int):
    """First divisible semi-convergent denominator of one finite expansion.

    Returns (k, m, p, q) or None.  Fan k draws denominators m*q_k + q_{k-1}
    for 0 <= m <= a_{k+1}; the oo-tail contributes the unbounded final fan.
    The seed denominator q_{-1} = 0 (fan 0, m = 0) is excluded.
    """
    p_prev, q_prev = 1, 0
    p, q = entries[0], 1
    for idx in range(1, len(entries)):
        a = entries[idx]
        k = idx - 1
        m = _fan_hit(q_prev, q, n, a, 1 if k == 0 else 0)
        if m is not None:
            return k, m, m * p + p_prev, m * q + q_prev
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    if inf_tail:
        k = len(entries) - 1
        m = _fan_hit(q_prev, q, n, None, 1)
        if m is not None:
            return k, m, m * p + p_prev, m * q + q_prev
    return None


def _check_finite(e: CFExpansion, n: int) -> LoopVerdict:
    value = cf_eval(e)
    if value.num == 0:
        raise ValueError("loop decisions require a positive value")
    if e.inf_tail:
        # the verdict is about the rational value, so examine both of its
        # expansions together with their tail progressions
        candidates = cf_from_rational(value)
    else:
        candidates = (e,)
    for cand in candidates:
        hit = _finite_witness([cand.a0, *cand.body], cand.inf_tail, n)
        if hit is not None:
            k, m, p, q = hit
            return LoopVerdict.not_loop(k, m, Rational(p, q))
    return LoopVerdict.loop()


def _check_periodic(e: CFExpansion, n: int) -> LoopVerdict:
    plen = len(e.period)
    blen = len(e.body)
    u, v = 0, 1  # q_{k-1}, q_k mod n
    seen: set[tuple[int, int, int]] = set()
    k = 0
    while True:
        j = k + 1  # index of the fan's closing partial quotient
        if j - 1 >= blen:
            key = ((j - 1 - blen) % plen, u, v)
            if key in seen:
                return LoopVerdict.loop()
            seen.add(key)
        a = e.entry(j)
        m = _fan_hit(u, v, n, a, 1 if k == 0 else 0)
        if m is not None:
            p_prev, q_prev = 1, 0
            p, q = e.a0, 1
            for i in range(1, k + 1):
                ai = e.entry(i)
                p, p_prev = ai * p + p_prev, p
                q, q_prev = ai * q + q_prev, q
            return LoopVerdict.not_loop(k, m, Rational(m * p + p_prev, m * q + q_prev))
        u, v = v, (a * v + u) % n
        k += 1


def _check_stream(entries_iter, n: int, depth_limit: int) -> LoopVerdict:
    it = iter(entries_iter)
    try:
        a0 = next(it)
    except StopIteration:
        raise ValueError("empty digit stream") from None
    if a0 < 0:
        raise ValueError("leading term must be nonnegative")
    entries = [a0]
    u, v = 0, 1
    for k in range(depth_limit):
        try:
            a = next(it)
        except StopIteration:
            return LoopVerdict.unknown(k)
        if a < 1:
            raise ValueError("partial quotients after a0 must be >= 1")
        entries.append(a)
        m = _fan_hit(u, v, n, a, 1 if k == 0 else 0)
        if m is not None:
            p_prev, q_prev = 1, 0
            p, q = entries[0], 1
            for ai in entries[1:-1]:
                p, p_prev = ai * p + p_prev, p
                q, q_prev = ai * q + q_prev, q
            return LoopVerdict.not_loop(k, m, Rational(m * p + p_prev, m * q + q_prev))
        u, v = v, (a * v + u) % n
    return LoopVerdict.unknown(depth_limit)


def _check_surd(s: QuadSurd, n: int) -> LoopVerdict:
    """Exact loop decision straight off a quadratic irrational.

    Avoids materialising the full expansion: the (P, Q) expansion state
    together with the denominator pair mod n is eventually periodic.
    """
    if not s.is_positive():
        raise ValueError("loop decisions require a positive value")
    entries: list[int] = []
    seen: set[tuple[int, int, int, int]] = set()
    P, Q, D = s.P, s.Q, s.D
    u, v = 0, 1
    k = 0
    while True:
        a = QuadSurd(P, Q, D).floor()
        entries.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
        if k >= 1:  # fan k-1 closes with partial quotient a_k = entries[k]
            m = _fan_hit(u, v, n, a, 1 if k == 1 else 0)
            if m is not None:
                p_prev, q_prev = 1, 0
                p, q = entries[0], 1
                for ai in entries[1:-1]:
                    p, p_prev = ai * p + p_prev, p
                    q, q_prev = ai * q + q_prev, q
                return LoopVerdict.not_loop(k - 1, m, Rational(m * p + p_prev, m * q + q_prev))
            u, v = v, (a * v + u) % n
        key = (P, Q, u, v)
        if key in seen:
            return LoopVerdict.loop()
        seen.add(key)
        k += 1


def is_infinite_loop(
    e: Union[CFExpansion, QuadSurd, Iterable[int]],
    n: int,
    depth_limit: Optional[int] = None,
) -> LoopVerdict:
    """Decide whether the value of e is an infinite loop mod n.

    Exact for finite expansions (both twin expansions and their oo-tails are
    consulted when the tail convention is active), for periodic expansions
    and for QuadSurd values.  A bare iterable of partial quotients is treated
    as a truncated digit stream and checked up to depth_limit (default
    10000), returning UNKNOWN when no witness surfaces.
    """
    if n < 2:
        raise ValueError("modulus must be >= 2")
    if isinstance(e, CFExpansion):
        if e.is_periodic:
            return _check_periodic(e, n)
        return _check_finite(e, n)
    if isinstance(e, QuadSurd):
        return _check_surd(e, n)
    return _check_stream(e, n, depth_limit or DEFAULT_STREAM_DEPTH)


def loop_scaling_check(e: CFExpansion, n: int, k: int) -> bool:
    """Check that a loop mod n stays a loop mod k*n (divisibility is monotone)."""
    if k < 1:
        raise ValueError("scale factor must be >= 1")
    if not is_infinite_loop(e, n).is_loop:
        raise ValueError(f"{e} is not an infinite loop mod {n}")
    return is_infinite_loop(e, k * n).is_loop


# ---------------------------------------------------------------------------
# the pruned denominator-pair graph


def successors(state: ModState, n: int) -> tuple[tuple[str, ModState], ...]:
    """Unpruned moves; the created denominator u+v must not vanish mod n."""
    w = (state.u + state.v) % n
    if w == 0:
        return ()
    return (("L", ModState(w, state.v)), ("R", ModState(state.u, w)))


def loop_graph(n: int) -> dict[ModState, tuple[tuple[str, ModState], ...]]:
    """Subgraph reachable from the start state (1, 1), i.e. the interval (0, 1)."""
    if n < 2:
        raise ValueError("modulus must be >= 2")
    start = ModState(1 % n, 1 % n)
    graph: dict[ModState, tuple[tuple[str, ModState], ...]] = {}
    frontier = [start]
    while frontier:
        state = frontier.pop()
        if state in graph:
            continue
        moves = successors(state, n)
        graph[state] = moves
        frontier.extend(t for _, t in moves)
    return graph


def loop_exists(n: int) -> bool:
    """True iff some cycle is reachable in the pruned graph.

    An infinite unpruned walk in a finite graph must revisit a state, and a
    reachable cycle conversely extends to an infinite walk; eventually
    constant letter words (rational limits, decided through their tail
    progressions) appear as single-letter cycles and are covered by the same
    pruning rule.
    """
    graph = loop_graph(n)
    out = {s: sum(1 for _, t in moves if t in graph) for s, moves in graph.items()}
    preds: dict[ModState, list[ModState]] = {s: [] for s in graph}
    for s, moves in graph.items():
        for _, t in moves:
            preds[t].append(s)
    queue = [s for s, d in out.items() if d == 0]
    removed = set()
    while queue:
        s = queue.pop()
        removed.add(s)
        for pred in preds[s]:
            out[pred] -= 1
            if out[pred] == 0 and pred not in removed:
                queue.append(pred)
    return len(removed) < len(graph)


def _find_cycle(n: int) -> tuple[list[str], list[str]]:
    """DFS for a reachable cycle; returns (prefix letters, cycle letters)."""
    start = ModState(1 % n, 1 % n)
    path_states = [start]
    path_letters: list[str] = []
    onstack = {start: 0}
    iters = [iter(successors(start, n))]
    visited = {start}
    while iters:
        try:
            letter, target = next(iters[-1])
        except StopIteration:
            iters.pop()
            dead = path_states.pop()
            onstack.pop(dead)
            if path_letters:
                path_letters.pop()
            continue
        if target in onstack:
            j = onstack[target]
            return path_letters[:j], path_letters[j:] + [letter]
        if target in visited:
            continue
        visited.add(target)
        onstack[target] = len(path_states)
        path_states.append(target)
        path_letters.append(letter)
        iters.append(iter(successors(target, n)))
    raise ValueError(f"no infinite loops exist mod {n}")


def _letters_to_expansion(prefix: list[str], cycle: list[str]) -> CFExpansion:
    """Eventually periodic expansion of the word R . prefix . cycle^oo.

    The leading R is the step from the base edge into the interval (0, 1);
    run lengths of the letter word are the partial quotients.  Runs are
    collected until a run starts twice at the same cycle offset with the same
    letter, which closes the period of the quotient sequence.
    """

    def letter_stream():
        yield "R", None
        for ltr in prefix:
            yield ltr, None
        while True:
            for i, ltr in enumerate(cycle):
                yield ltr, i

    runs: list[tuple[str, int, Optional[int]]] = []
    stream = letter_stream()
    cur_letter, cur_anchor = next(stream)
    cur_count = 1
    anchors_seen: dict[tuple[Optional[int], str], int] = {}
    while True:
        letter, anchor = next(stream)
        if letter == cur_letter:
            cur_count += 1
            continue
        runs.append((cur_letter, cur_count, cur_anchor))
        if cur_anchor is not None:
            key = (cur_anchor, cur_letter)
            if key in anchors_seen:
                s = anchors_seen[key]
                t = len(runs) - 1
                counts = [c for _, c, _ in runs]
                return CFExpansion(0, tuple(counts[:s]), tuple(counts[s:t]))
            anchors_seen[key] = len(runs) - 1
        cur_letter, cur_anchor, cur_count = letter, anchor, 1


def loop_example(n: int) -> CFExpansion:
    """A concrete infinite loop mod n, validated by the exact decision.

    A mixed cycle word yields an eventually periodic expansion (a quadratic
    irrational); a single-letter cycle is an absorbing mediant walk whose
    limit is rational, returned with its oo-tail.
    """
    prefix, cycle = _find_cycle(n)
    if len(set(cycle)) == 1:
        lo, hi = Rational(0, 1), Rational(1, 1)
        for letter in prefix:
            m = Rational(lo.num + hi.num, lo.den + hi.den)
            if letter == "L":
                lo = m
            else:
                hi = m
        value = hi if cycle[0] == "L" else lo
        result = cf_from_rational(value)[0]
    else:
        result = _letters_to_expansion(prefix, cycle)
    verdict = is_infinite_loop(result, n)
    if not verdict.is_loop:
        raise RuntimeError(f"extracted cycle mod {n} failed validation: {verdict.record()}")
    return result


# ---------------------------------------------------------------------------
# mediant-tree walk


def sb_walk(e: CFExpansion, n: int, depth: int) -> list[tuple[str, int]]:
    """Letter word of the mediant walk toward value(e) with created denominators mod n.

    The walk starts at the base edge, so the word groups into runs matching
    the partial quotients (first run length a_1) and the created denominators
    are the nonzero semi-convergent denominators in order of appearance.
    Requires a value strictly inside (0, 1).
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if e.a0 != 0:
        raise ValueError("value must lie in (0, 1)")
    if e.is_finite:
        value = cf_eval(e)
        if value.num == 0 or value >= Rational(1):
            raise ValueError("value must lie strictly inside (0, 1)")
    out: list[tuple[str, int]] = []
    c, d = 1, 0  # denominators of the current interval endpoints
    i = 1
    while len(out) < depth:
        letter = "R" if i % 2 == 1 else "L"
        try:
            a = e.entry(i)
        except IndexError:
            if not e.inf_tail:
                break
            # the oo-tail is one infinite final run
            while len(out) < depth:
                created = c + d
                out.append((letter, created % n))
                if letter == "L":
                    c = created
                else:
                    d = created
            break
        for _ in range(a):
            created = c + d
            out.append((letter, created % n))
            if letter == "L":
                c = created
            else:
                d = created
            if len(out) == depth:
                break
        i += 1
    return out
