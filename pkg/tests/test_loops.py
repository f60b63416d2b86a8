import math
import random
from fractions import Fraction

import pytest

from fareyloops.contfrac import CFExpansion, cf_from_rational, cf_value
from fareyloops.loops import (
    LOOP,
    NOTLOOP,
    UNKNOWN,
    LoopVerdict,
    ModState,
    is_infinite_loop,
    loop_example,
    loop_exists,
    loop_graph,
    loop_scaling_check,
    sb_walk,
    successors,
)
from fareyloops.rationals import Rational
from fareyloops.sampling import random_periodic_cf
from fareyloops.surds import QuadSurd

GOLDEN_CONJ = CFExpansion(0, (), (1,))
HALF = cf_from_rational(Rational(1, 2))[0]


def brute_rational_verdict(x: Fraction, n: int) -> bool:
    """Independent enumeration straight from the definition: all interior
    semi-convergent denominators of both expansions, plus both oo-tail
    progressions over a full residue cycle.  True means loop."""
    for e in cf_from_rational(x):
        entries = [e.a0, *e.body]
        q_prev, q = 0, 1
        dens = []
        for idx in range(1, len(entries)):
            a = entries[idx]
            dens.extend(m * q + q_prev for m in range(a + 1))
            q_prev, q = q, a * q + q_prev
        dens.extend(m * q + q_prev for m in range(1, n + 1))  # tail cycle
        if any(d % n == 0 for d in dens if d != 0):
            return False
    return True


class TestVerdictRecord:
    def test_records(self):
        assert LoopVerdict.loop().record() == "LOOP"
        v = LoopVerdict.not_loop(1, 2, Rational(2, 5))
        assert v.record() == "NOTLOOP k=1 m=2 q=5"
        assert LoopVerdict.unknown(10000).record() == "UNKNOWN depth=10000"


class TestRationalDecisions:
    def test_half_examples(self):
        assert is_infinite_loop(HALF, 4).kind == LOOP
        v = is_infinite_loop(HALF, 5)
        assert v.kind == NOTLOOP
        assert v.witness.den == 5
        assert v.witness_m == 2  # tail progression 2m + 1 hits 5 at m = 2

    def test_twin_gives_same_verdict(self):
        canonical, twin = cf_from_rational(Rational(1, 2))
        for n in range(2, 13):
            assert is_infinite_loop(canonical, n).kind == is_infinite_loop(twin, n).kind

    def test_integer_never_loops(self):
        two = cf_from_rational(Rational(2))[0]
        for n in range(2, 9):
            assert is_infinite_loop(two, n).kind == NOTLOOP

    def test_rejects_zero_and_small_modulus(self):
        zero = cf_from_rational(0)[0]
        with pytest.raises(ValueError):
            is_infinite_loop(zero, 4)
        with pytest.raises(ValueError):
            is_infinite_loop(HALF, 1)

    def test_against_brute_enumeration(self):
        rng = random.Random(11)
        for _ in range(250):
            q = rng.randint(2, 80)
            p = rng.randint(1, q - 1)
            x = Fraction(p, q)
            e = cf_from_rational(x)[0]
            for n in (2, 3, 4, 5, 6, 7, 9, 12):
                assert is_infinite_loop(e, n).is_loop == brute_rational_verdict(x, n)

    def test_flag_off_checks_only_own_fans(self):
        # without the tail, [0; 2] has interior denominators {0, 1, 2} only
        bare = CFExpansion(0, (2,))
        assert is_infinite_loop(bare, 5).kind == LOOP
        assert is_infinite_loop(CFExpansion(0, (2,), None, True), 5).kind == NOTLOOP


class TestPeriodicDecisions:
    def test_golden_conjugate_never_loops(self):
        # denominators are the Fibonacci numbers; Fibonacci mod n always hits 0
        for n in range(2, 40):
            v = is_infinite_loop(GOLDEN_CONJ, n)
            assert v.kind == NOTLOOP
            fibs = [0, 1]
            while fibs[-1] % n or len(fibs) < 3:
                fibs.append(fibs[-1] + fibs[-2])
            assert v.witness.den == fibs[-1]

    def test_surd_input_agrees_with_expansion_input(self):
        rng = random.Random(12)
        for _ in range(80):
            e = random_periodic_cf(rng)
            s = cf_value(e)
            for n in (2, 3, 4, 5, 9):
                assert is_infinite_loop(s, n).kind == is_infinite_loop(e, n).kind

    def test_periodic_agrees_with_deep_stream(self):
        rng = random.Random(13)
        for _ in range(1000):
            e = random_periodic_cf(rng)
            n = rng.randint(2, 12)
            exact = is_infinite_loop(e, n)
            stream = is_infinite_loop((e.entry(i) for i in range(10_001)), n)
            if exact.kind == NOTLOOP:
                assert stream.kind == NOTLOOP
                assert stream.witness == exact.witness
            else:
                assert stream.kind == UNKNOWN


class TestStreams:
    def test_unknown_at_depth(self):
        v = is_infinite_loop(iter([0, 2, 1, 1]), 97)
        assert v.kind == UNKNOWN and v.depth == 3

    def test_depth_limit(self):
        def ones():
            yield 0
            while True:
                yield 1

        v = is_infinite_loop(ones(), 10**9, depth_limit=50)
        assert v.kind == UNKNOWN and v.depth == 50

    def test_witness_found(self):
        v = is_infinite_loop(iter([0, 2, 3, 1]), 7, depth_limit=10)
        assert v.kind == NOTLOOP and v.witness.den == 7


class TestScaling:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_half_mod_four_scales(self, k):
        assert loop_scaling_check(HALF, 4, k)

    def test_precondition_enforced(self):
        with pytest.raises(ValueError):
            loop_scaling_check(HALF, 5, 2)

    def test_scaling_across_discovered_loops(self):
        for n in range(4, 20):
            e = loop_example(n)
            for k in range(1, 6):
                assert loop_scaling_check(e, n, k)


class TestGraph:
    def test_successors_prune_vanishing_mediant(self):
        assert successors(ModState(1, 3), 4) == ()
        moves = dict(successors(ModState(1, 1), 4))
        assert moves == {"L": ModState(2, 1), "R": ModState(1, 2)}

    def test_graph_reachable_set(self):
        g = loop_graph(4)
        assert ModState(1, 1) in g
        assert all(isinstance(s, ModState) for s in g)

    def test_existence_small(self):
        assert not loop_exists(2)
        assert not loop_exists(3)
        assert loop_exists(4)
        assert loop_exists(5)
        with pytest.raises(ValueError):
            loop_exists(1)

    def test_existence_range(self):
        assert [n for n in range(2, 101) if not loop_exists(n)] == [2, 3]


class TestLoopExample:
    def test_mod_four_is_one_half(self):
        e = loop_example(4)
        assert (e.a0, e.body, e.inf_tail) == (0, (2,), True)

    def test_mod_five_validated(self):
        e = loop_example(5)
        assert is_infinite_loop(e, 5).kind == LOOP

    def test_error_when_none_exist(self):
        with pytest.raises(ValueError):
            loop_example(2)

    def test_examples_validated_range(self):
        for n in range(4, 40):
            assert is_infinite_loop(loop_example(n), n).kind == LOOP


class TestWalk:
    def test_three_sevenths_mod_five(self):
        walk = sb_walk(CFExpansion(0, (2, 3), None, True), 5, 4)
        assert [r for _, r in walk] == [1, 2, 3, 0]  # denominator 5 at step 4

    def test_half_mod_four_zero_free(self):
        walk = sb_walk(CFExpansion(0, (2,), None, True), 4, 60)
        assert all(r != 0 for _, r in walk)

    def test_first_run_length_is_first_quotient(self):
        rng = random.Random(14)
        for _ in range(50):
            e = random_periodic_cf(rng, a0_max=0)
            walk = sb_walk(e, 7, e.entry(1) + 1)
            first = [letter for letter, _ in walk]
            assert first[: e.entry(1)] == ["R"] * e.entry(1)
            assert first[e.entry(1)] == "L"

    def test_zero_residue_iff_not_loop(self):
        rng = random.Random(15)
        for _ in range(120):
            q = rng.randint(3, 70)
            p = rng.randint(1, q - 1)
            if math.gcd(p, q) != 1 or Fraction(p, q) == Fraction(1, 2):
                continue
            e = cf_from_rational(Fraction(p, q))[0]
            for n in (2, 3, 4, 5, 8):
                walk = sb_walk(e, n, 4 * (p + q))
                hit = any(r == 0 for _, r in walk)
                assert hit == (not is_infinite_loop(e, n).is_loop)

    def test_domain_checks(self):
        with pytest.raises(ValueError):
            sb_walk(CFExpansion(1, (2,)), 4, 5)
        with pytest.raises(ValueError):
            sb_walk(cf_from_rational(0)[0], 4, 5)
