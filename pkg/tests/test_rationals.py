import pytest
from hypothesis import given
from hypothesis import strategies as st

from fareyloops.rationals import (
    INFINITY,
    FareyEdge,
    Rational,
    farey_difference,
    farey_mediant,
    is_dual_neighbor,
    is_farey_neighbor,
    is_gamma0_neighbor,
)


def R(num, den=1):
    return Rational(num, den)


class TestRational:
    def test_reduction_and_sign(self):
        assert R(6, 4) == R(3, 2)
        assert R(-6, 4) == R(-3, 2)
        assert R(3, -2) == R(-3, 2)
        assert R(0, -7) == R(0, 1)

    def test_infinity_canonical(self):
        assert R(5, 0) == INFINITY
        assert R(-5, 0) == INFINITY
        assert INFINITY.num == 1 and INFINITY.den == 0

    def test_zero_over_zero_rejected(self):
        with pytest.raises(ZeroDivisionError):
            R(0, 0)

    def test_total_order(self):
        assert R(1, 3) < R(2, 5) < R(1, 2) < R(1) < INFINITY
        assert not INFINITY < INFINITY
        assert R(-1, 2) < R(0)

    def test_scaled(self):
        assert R(1, 2).scaled(6) == R(3)
        assert R(2, 3).scaled(6) == R(4)
        assert INFINITY.scaled(7) == INFINITY

    def test_str(self):
        assert str(R(3, 7)) == "3/7"
        assert str(INFINITY) == "1/0"

    def test_immutable(self):
        with pytest.raises(AttributeError):
            R(1, 2).num = 7


class TestEdge:
    def test_unordered(self):
        assert FareyEdge(R(1, 2), R(1, 3)) == FareyEdge(R(1, 3), R(1, 2))
        assert FareyEdge(R(0), INFINITY).is_base

    def test_degenerate(self):
        with pytest.raises(ValueError):
            FareyEdge(R(1, 2), R(2, 4))


class TestMediantDifference:
    def test_mediant_examples(self):
        assert farey_mediant(R(0), R(1)) == R(1, 2)
        assert farey_mediant(R(0), INFINITY) == R(1)
        assert farey_mediant(R(1, 3), R(2, 5)) == R(3, 8)

    def test_mediant_rejects_equal(self):
        with pytest.raises(ValueError):
            farey_mediant(R(1, 2), R(1, 2))
        with pytest.raises(ValueError):
            farey_mediant(INFINITY, INFINITY)

    def test_difference_examples(self):
        assert farey_difference(R(1, 2), R(1)) == R(0)
        assert farey_difference(INFINITY, R(0)) == R(-1)
        assert farey_difference(R(3, 8), R(1, 3)) == R(2, 5)

    def test_difference_rejects_equal(self):
        with pytest.raises(ValueError):
            farey_difference(R(2, 3), R(2, 3))

    def test_difference_undoes_mediant(self):
        for a, b in [(R(0), R(1)), (R(1, 3), R(2, 5)), (R(2, 7), R(1, 3))]:
            assert farey_difference(farey_mediant(a, b), a) == b


class TestNeighborPredicates:
    def test_farey_examples(self):
        assert is_farey_neighbor(R(1, 2), R(2, 3))
        assert is_farey_neighbor(R(0), INFINITY)
        assert is_farey_neighbor(R(1, 3), R(2, 5))
        assert not is_farey_neighbor(R(1, 3), R(3, 5))

    def test_gamma0_examples(self):
        assert is_gamma0_neighbor(R(0), R(1, 2), 2)
        assert not is_gamma0_neighbor(R(1, 3), R(1, 2), 5)
        assert is_gamma0_neighbor(R(0), R(1, 5), 5)

    def test_gamma0_level_one(self):
        assert is_gamma0_neighbor(R(1, 2), R(2, 3), 1)
        assert not is_gamma0_neighbor(R(1, 3), R(3, 5), 1)

    def test_dual_examples(self):
        assert is_dual_neighbor(R(1, 2), R(1, 3), 6)
        assert not is_dual_neighbor(R(1, 2), R(1, 3), 5)

    def test_dual_but_not_gamma0_at_six(self):
        assert is_dual_neighbor(R(1, 2), R(1, 3), 6)
        assert not is_gamma0_neighbor(R(1, 2), R(1, 3), 6)

    def test_integer_vertex_edges(self):
        for n in (2, 3, 5, 12):
            for k in range(4):
                assert is_gamma0_neighbor(R(k), INFINITY, n)


def unit_interval_neighbor_pairs(max_den):
    """All Farey-neighbour pairs inside [0, 1] with both denominators <= max_den,
    generated by mediant subdivision of the base interval."""
    stack = [(Rational(0), Rational(1))]
    while stack:
        a, b = stack.pop()
        yield a, b
        m = farey_mediant(a, b)
        if m.den <= max_den:
            stack.append((a, m))
            stack.append((m, b))


class TestExhaustiveNeighborStructure:
    def test_mediant_closure_dens_up_to_100(self):
        for a, b in unit_interval_neighbor_pairs(100):
            m = farey_mediant(a, b)
            assert is_farey_neighbor(a, m)
            assert is_farey_neighbor(m, b)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8, 9, 10, 12])
    def test_gamma0_implies_dual(self, n):
        for a, b in unit_interval_neighbor_pairs(60):
            if is_gamma0_neighbor(a, b, n):
                assert is_dual_neighbor(a, b, n)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
    def test_prime_power_equivalence_dens_up_to_100(self, n):
        for a, b in unit_interval_neighbor_pairs(100):
            assert is_gamma0_neighbor(a, b, n) == is_dual_neighbor(a, b, n)

    @pytest.mark.parametrize("n", [6, 10, 12, 15])
    def test_composite_levels_have_strict_gap(self, n):
        strict = [
            (a, b)
            for a, b in unit_interval_neighbor_pairs(40)
            if is_dual_neighbor(a, b, n) and not is_gamma0_neighbor(a, b, n)
        ]
        assert strict


@given(
    st.integers(min_value=-40, max_value=40),
    st.integers(min_value=1, max_value=40),
    st.integers(min_value=-40, max_value=40),
    st.integers(min_value=1, max_value=40),
)
def test_mediant_commutes_and_sits_between(p, q, r, s):
    a, b = Rational(p, q), Rational(r, s)
    if a == b:
        return
    m = farey_mediant(a, b)
    assert m == farey_mediant(b, a)
    lo, hi = (a, b) if a < b else (b, a)
    assert lo < m < hi
