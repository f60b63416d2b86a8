import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fareyloops.contfrac import (
    CFExpansion,
    cf_from_rational,
    cf_value,
    convergents,
    multiply_cf,
    semiconvergent,
)
from fareyloops.cutting import (
    CuttingWord,
    crossed_edges,
    crosses_edge,
    eta,
    eta_inverse,
    fan_chain,
    loop_verdict_geometric,
)
from fareyloops.loops import LOOP, NOTLOOP, is_infinite_loop
from fareyloops.rationals import INFINITY, FareyEdge, Rational
from fareyloops.sampling import random_finite_cf, random_periodic_cf
from fareyloops.surds import QuadSurd

GOLDEN_CONJ = CFExpansion(0, (), (1,))


class TestWordType:
    def test_validation(self):
        with pytest.raises(ValueError):
            CuttingWord((("L", 2), ("L", 3)))
        with pytest.raises(ValueError):
            CuttingWord((("R", 0),))
        with pytest.raises(ValueError):
            CuttingWord((("X", 1),))
        with pytest.raises(ValueError):
            CuttingWord(())

    def test_str(self):
        w = CuttingWord((("R", 2), ("L", 3)))
        assert str(w) == "R^2 L^3"


class TestEta:
    def test_examples(self):
        w = CuttingWord((("R", 2), ("L", 3)))
        assert eta(w) == CFExpansion(0, (2, 3))
        lr = CuttingWord(tuple(("L" if i % 2 == 0 else "R", 1) for i in range(6)))
        assert eta(lr) == CFExpansion(1, (1, 1, 1, 1, 1))

    def test_inverse_examples(self):
        assert eta_inverse(CFExpansion(0, (2, 3))) == CuttingWord((("R", 2), ("L", 3)))
        w = eta_inverse(GOLDEN_CONJ, 6)
        assert str(w) == "R L R L R L"

    @given(
        st.integers(min_value=0, max_value=5),
        st.lists(st.integers(min_value=1, max_value=7), min_size=1, max_size=8),
    )
    def test_round_trip(self, a0, body):
        e = CFExpansion(a0, tuple(body))
        assert eta(eta_inverse(e)) == e

    @given(
        st.booleans(),
        st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=8),
    )
    def test_word_round_trip(self, start_left, counts):
        letters = ("L", "R") if start_left else ("R", "L")
        runs = tuple((letters[i % 2], c) for i, c in enumerate(counts))
        w = CuttingWord(runs)
        assert eta_inverse(eta(w)) == w


class TestCrossesEdge:
    def test_interval_membership(self):
        edge = FareyEdge(Rational(1, 3), Rational(2, 5))
        assert crosses_edge(Rational(3, 8), edge)
        assert not crosses_edge(Rational(1, 2), edge)

    def test_infinite_endpoint(self):
        assert crosses_edge(QuadSurd(0, 1, 2), FareyEdge(Rational(1), INFINITY))
        assert not crosses_edge(Rational(1, 2), FareyEdge(Rational(1), INFINITY))

    def test_base_edge_is_anchor(self):
        assert not crosses_edge(Rational(3, 8), FareyEdge(Rational(0), INFINITY))

    def test_endpoint_is_termination(self):
        edge = FareyEdge(Rational(1, 3), Rational(2, 5))
        assert not crosses_edge(Rational(1, 3), edge)
        assert not crosses_edge(Rational(2, 5), edge)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            crosses_edge(Rational(1, 2), FareyEdge(Rational(-1), Rational(0)))


class TestCrossedEdges:
    def test_one_half(self):
        edges = crossed_edges(cf_from_rational(Rational(1, 2))[0])
        assert [str(e) for e in edges] == ["0/1 -- 1/0", "0/1 -- 1/1"]

    def test_golden_pivots(self):
        edges = crossed_edges(GOLDEN_CONJ, 8)
        pivots = [p for p, _ in fan_chain(edges)]
        assert [str(p) for p in pivots] == ["0/1", "1/1", "1/2", "2/3", "3/5", "5/8", "8/13"]

    def test_every_edge_crossed(self):
        rng = random.Random(21)
        for _ in range(60):
            e = random_finite_cf(rng, a0_max=2)
            value = cf_value(e)
            if value.num == 0:
                continue
            for edge in crossed_edges(e)[1:]:
                assert crosses_edge(value, edge)

    def test_endpoints_are_convergent_and_semiconvergent(self):
        rng = random.Random(22)
        for _ in range(40):
            e = random_finite_cf(rng, a0_max=0, min_len=2, max_len=6)
            convs = set(convergents(e))
            semis = set()
            for k in range(e.last_index):
                for m in range(e.entry(k + 1) + 1):
                    semis.add(semiconvergent(e, k, m))
            for edge in crossed_edges(e)[1:]:
                a, b = edge.endpoints()
                assert (a in convs and b in semis | convs) or (
                    b in convs and a in semis | convs
                )

    def test_depth_required_for_periodic(self):
        with pytest.raises(ValueError):
            crossed_edges(GOLDEN_CONJ)
        assert len(crossed_edges(GOLDEN_CONJ, 5)) == 5

    def test_integer_leading_fan(self):
        e = cf_from_rational(Rational(7, 3))[0]  # [2; 3]
        edges = crossed_edges(e)
        assert str(edges[1]) == "1/1 -- 1/0"
        assert str(edges[2]) == "2/1 -- 1/0"
        assert str(edges[3]) == "2/1 -- 3/1"


class TestFanStructure:
    def test_quotients_recovered_for_rationals(self):
        rng = random.Random(23)
        for _ in range(80):
            e = random_finite_cf(rng, a0_max=0)
            sizes = [s for _, s in fan_chain(crossed_edges(e))]
            expected = list(e.body)
            assert sizes[:-1] == expected[:-1]
            assert sizes[-1] + 1 == expected[-1]

    def test_quotients_recovered_for_periodic(self):
        rng = random.Random(24)
        for _ in range(60):
            e = random_periodic_cf(rng, a0_max=0)
            sizes = [s for _, s in fan_chain(crossed_edges(e, 30))]
            complete = sizes[:-1]
            assert complete == [e.entry(i + 1) for i in range(len(complete))]

    def test_scaled_tessellation_word_is_scaled_expansion(self):
        # reading the crossed edges of the scaled value reproduces exactly the
        # scaled expansion: multiplication realised on the word level
        rng = random.Random(25)
        for _ in range(40):
            e = random_periodic_cf(rng, a0_max=0)
            n = rng.randint(2, 10)
            scaled = multiply_cf(e, n)
            sizes = [s for _, s in fan_chain(crossed_edges(scaled, 25))]
            complete = sizes[:-1]
            # for a value above 1 the first fan is the integer-vertex run a0
            first = 0 if scaled.a0 >= 1 else 1
            assert complete == [scaled.entry(first + i) for i in range(len(complete))]


class TestGeometricVerdict:
    def test_half_examples(self):
        half = cf_from_rational(Rational(1, 2))[0]
        assert loop_verdict_geometric(half, 4).kind == LOOP
        v = loop_verdict_geometric(half, 5)
        assert v.kind == NOTLOOP and v.witness.den == 5

    def test_golden_mod_three(self):
        v = loop_verdict_geometric(GOLDEN_CONJ, 3)
        assert v.kind == NOTLOOP and v.witness.den == 3

    def test_agreement_with_denominator_decision(self):
        rng = random.Random(26)
        for _ in range(300):
            q = rng.randint(3, 90)
            p = rng.randint(1, q - 1)
            e = cf_from_rational(Rational(p, q))[0]
            for n in (2, 3, 5, 7, 10):
                assert loop_verdict_geometric(e, n).kind == is_infinite_loop(e, n).kind

    def test_periodic_closure(self):
        rng = random.Random(27)
        for _ in range(100):
            e = random_periodic_cf(rng, a0_max=0)
            n = rng.randint(2, 10)
            assert loop_verdict_geometric(e, n, depth=30).kind == is_infinite_loop(e, n).kind

    def test_requires_unit_interval(self):
        with pytest.raises(ValueError):
            loop_verdict_geometric(CFExpansion(1, (2,)), 4)
