"""Mediant-insertion search for neighbour paths from 0 to 1 at level n.

Two mirror algorithms: the vertex form inserts Farey mediants between
consecutive vertices that are not level-n neighbours; the denominator form
runs the same recursion on denominators reduced mod n, where a consecutive
pair is resolved exactly when one member vanishes.  Sequence lengths grow
geometrically, so whether the process terminates within a given number of
rounds is decided on the finite set of unresolved residue pairs, and the
actual rounds are materialised only up to a size guard.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .rationals import Rational, farey_mediant, is_gamma0_neighbor

DEFAULT_MATERIALIZE_LIMIT = 1 << 17  # vertices per round


@dataclass(frozen=True)
class MediantRun:
    """Result of iterating the insertion process.

    ``rounds`` holds the materialised iterations starting from round 0; when
    the projected sequence length passes the size guard later rounds are
    dropped but ``terminated``/``rounds_run`` stay exact.
    """

    terminated: bool
    rounds_run: int
    rounds: tuple

    @property
    def final(self):
        return self.rounds[-1]


def _unresolved_rounds(n: int, max_iter: int) -> Optional[int]:
    """Round at which no unresolved residue pair remains, or None within max_iter.

    Tracks the set of unresolved consecutive denominator pairs mod n; a pair
    (u, v) with u + v = 0 mod n resolves both its children, any other pair
    spawns (u, u+v) and (u+v, v).
    """
    pairs = {(1 % n, 1 % n)}
    for i in range(1, max_iter + 1):
        nxt = set()
        for u, v in pairs:
            w = (u + v) % n
            if w:
                nxt.add((u, w))
                nxt.add((w, v))
        if not nxt:
            return i
        pairs = nxt
    return None


def v_algorithm(
    n: int, max_iter: int, materialize_limit: int = DEFAULT_MATERIALIZE_LIMIT
) -> MediantRun:
    """Vertex sequences V_0, V_1, ... between 0/1 and 1/1.

    Each round inserts the mediant between every consecutive pair that is not
    a level-n neighbour; the run terminates when all pairs are neighbours.
    """
    if n < 2:
        raise ValueError("modulus must be >= 2")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    stop = _unresolved_rounds(n, max_iter)
    terminated = stop is not None
    rounds_run = stop if terminated else max_iter

    verts = [Rational(0, 1), Rational(1, 1)]
    rounds = [tuple(verts)]
    for _ in range(rounds_run):
        if 2 * len(verts) > materialize_limit:
            break
        nxt = [verts[0]]
        for a, b in zip(verts, verts[1:]):
            if not is_gamma0_neighbor(a, b, n):
                nxt.append(farey_mediant(a, b))
            nxt.append(b)
        verts = nxt
        rounds.append(tuple(verts))
    if terminated and len(rounds) == rounds_run + 1:
        final = rounds[-1]
        assert all(is_gamma0_neighbor(a, b, n) for a, b in zip(final, final[1:]))
    return MediantRun(terminated, rounds_run, tuple(rounds))


def d_algorithm(
    n: int, max_iter: int, materialize_limit: int = DEFAULT_MATERIALIZE_LIMIT
) -> MediantRun:
    """Denominator sequences D_0, D_1, ... mod n, mirroring v_algorithm.

    A consecutive pair is resolved iff exactly one member is 0; unresolved
    pairs receive their sum mod n.  Two adjacent zeros cannot occur because
    consecutive denominators are coprime; asserted each round.
    """
    if n < 2:
        raise ValueError("modulus must be >= 2")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    stop = _unresolved_rounds(n, max_iter)
    terminated = stop is not None
    rounds_run = stop if terminated else max_iter

    seq = [1 % n, 1 % n]
    rounds = [tuple(seq)]
    for _ in range(rounds_run):
        if 2 * len(seq) > materialize_limit:
            break
        nxt = [seq[0]]
        for u, v in zip(seq, seq[1:]):
            assert not (u == 0 and v == 0), "adjacent zero denominators"
            if not ((u == 0) != (v == 0)):
                nxt.append((u + v) % n)
            nxt.append(v)
        seq = nxt
        rounds.append(tuple(seq))
    return MediantRun(terminated, rounds_run, tuple(rounds))


def nonterminating(n: int) -> bool:
    """True iff the insertion process can never terminate.

    Structural criterion: the residue pair (1, 2) regenerates itself, i.e.
    (1, 2) is reachable from itself in at least one step of the unresolved
    pair expansion.  Once a sequence contains an adjacent (1, 2) it then
    contains one at every later round.
    """
    if n < 2:
        raise ValueError("modulus must be >= 2")
    target = (1 % n, 2 % n)
    if target[0] == 0 or target[1] == 0:
        return False

    def children(u: int, v: int):
        w = (u + v) % n
        if w:
            yield (u, w)
            yield (w, v)

    frontier = list(children(*target))
    seen = set(frontier)
    while frontier:
        pair = frontier.pop()
        if pair == target:
            return True
        for child in children(*pair):
            if child not in seen:
                seen.add(child)
                frontier.append(child)
    return False
