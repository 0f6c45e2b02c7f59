import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagbound.errors import ValidationError
from flagbound.exact_arith import (
    Comparison,
    RadicalProduct,
    RationalInterval,
    binomial,
    compare_radical,
    compare_radical_enclosure,
    compare_radical_exact,
    digit_budget,
    format_rational,
    fraction_approx,
    integer_nth_root,
    parse_rational,
)


class TestBinomial:
    def test_values(self):
        assert binomial(4, 2) == 6
        assert binomial(0, 0) == 1
        assert binomial(5, 0) == 1
        assert binomial(5, 5) == 1

    def test_n_below_k_is_zero(self):
        assert binomial(1, 2) == 0
        assert binomial(0, 3) == 0
        assert binomial(-1, 0) == 0
        assert binomial(-5, 2) == 0

    def test_negative_k_rejected(self):
        with pytest.raises(ValidationError):
            binomial(4, -1)

    @given(st.integers(min_value=0, max_value=200), st.integers(min_value=0, max_value=200))
    def test_matches_math_comb(self, n, k):
        expected = math.comb(n, k) if n >= k else 0
        assert binomial(n, k) == expected

    @given(st.integers(min_value=1, max_value=120), st.integers(min_value=1, max_value=120))
    def test_pascal_rule(self, n, k):
        assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


class TestRationalFormat:
    def test_format(self):
        assert format_rational(Fraction(3, 7)) == "3/7"
        assert format_rational(Fraction(-3, 7)) == "-3/7"
        assert format_rational(Fraction(8, 4)) == "2"
        assert format_rational(5) == "5"
        assert format_rational(Fraction(0)) == "0"

    def test_parse(self):
        assert parse_rational("3/7") == Fraction(3, 7)
        assert parse_rational("-12") == Fraction(-12)
        assert parse_rational(" 149900/3 ") == Fraction(149900, 3)

    @pytest.mark.parametrize("bad", ["", "1.5", "1e3", "3/0", "3/-2", "a/b", "1/2/3"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValidationError):
            parse_rational(bad)

    @given(st.fractions(max_denominator=10**9))
    def test_round_trip(self, q):
        assert parse_rational(format_rational(q)) == q

    def test_approx_is_labeled_width(self):
        assert fraction_approx(Fraction(1, 3), 5) == "0.33333"
        assert fraction_approx(Fraction(20000, 3), 20) == "6666.6666666666666667"


class TestIntegerNthRoot:
    def test_small(self):
        assert integer_nth_root(0, 3) == (0, True)
        assert integer_nth_root(1, 5) == (1, True)
        assert integer_nth_root(8, 3) == (2, True)
        assert integer_nth_root(9, 3) == (2, False)
        assert integer_nth_root(24, 2) == (4, False)
        assert integer_nth_root(10**18, 6) == (1000, True)

    def test_rejects(self):
        with pytest.raises(ValidationError):
            integer_nth_root(-1, 2)
        with pytest.raises(ValidationError):
            integer_nth_root(10, 0)

    @given(
        st.integers(min_value=0, max_value=10**40),
        st.integers(min_value=1, max_value=9),
    )
    @settings(max_examples=300)
    def test_floor_property(self, x, n):
        r, exact = integer_nth_root(x, n)
        assert r**n <= x < (r + 1) ** n
        assert exact == (r**n == x)


class TestRationalInterval:
    def test_basic(self):
        box = RationalInterval(Fraction(1, 3), Fraction(1, 2))
        assert box.width == Fraction(1, 6)
        assert box.midpoint == Fraction(5, 12)
        assert box.contains(Fraction(2, 5))
        assert not box.contains(1)
        assert not box.is_point

    def test_point(self):
        p = RationalInterval.point(7)
        assert p.is_point and p.width == 0

    def test_empty_rejected(self):
        with pytest.raises(ValidationError):
            RationalInterval(1, 0)

    def test_affine_and_expand(self):
        box = RationalInterval(9, 9).affine_image(Fraction(100), Fraction(49400))
        assert (box.lo, box.hi) == (50300, 50300)
        widened = box.expand(Fraction(1000, 3))
        assert widened.lo == Fraction(149900, 3)
        assert widened.hi == Fraction(151900, 3)
        with pytest.raises(ValidationError):
            box.affine_image(-1, 0)
        with pytest.raises(ValidationError):
            box.expand(-1)

    def test_containment(self):
        outer = RationalInterval(-2, 2)
        assert outer.contains_interval(RationalInterval(-1, 2))
        assert not outer.contains_interval(RationalInterval(-3, 0))

    def test_serialization(self):
        box = RationalInterval(Fraction(149900, 3), Fraction(151900, 3))
        assert box.to_dict() == {"lo": "149900/3", "hi": "151900/3"}


class TestRadicalProduct:
    def test_validation(self):
        with pytest.raises(ValidationError):
            RadicalProduct(Fraction(0))
        with pytest.raises(ValidationError):
            RadicalProduct(Fraction(1), ((0, 2),))
        with pytest.raises(ValidationError):
            RadicalProduct(Fraction(1), ((2, 0),))

    def test_str(self):
        rp = RadicalProduct(Fraction(4), ((24, 2), (24, 1)))
        assert str(rp) == "4 * 24^(1/2) * 24"
        assert str(RadicalProduct(Fraction(2, 3))) == "2/3"

    def test_rational_value(self):
        rp = RadicalProduct(Fraction(3), ((16, 2),))
        assert rp.is_rational
        assert rp.as_fraction() == 12
        assert not RadicalProduct(Fraction(1), ((24, 2),)).is_rational

    def test_enclosure_brackets_value(self):
        rp = RadicalProduct(Fraction(4), ((24, 2), (24, 1)))
        box = rp.enclosure(30)
        # 4 * 24^(3/2) = sqrt(221184): between 470 and 471
        assert 470 < box.lo <= box.hi < 471
        assert box.width < Fraction(1, 10**25)

    def test_enclosure_point_when_rational(self):
        box = RadicalProduct(Fraction(3), ((16, 2),)).enclosure(10)
        assert box.is_point and box.lo == 12

    def test_approx(self):
        assert RadicalProduct(Fraction(3), ((16, 2),)).approx(6) == "12"


class TestCompareRadical:
    # The worked boundary pair: 471^2 = 221841 > 4^2 * 24^3 = 221184 > 470^2 = 220900.
    BOUNDARY = RadicalProduct(Fraction(4), ((24, 2), (24, 1)))

    def test_boundary_pair(self):
        assert compare_radical(471, self.BOUNDARY) is Comparison.GREATER
        assert compare_radical(470, self.BOUNDARY) is Comparison.LESS

    def test_both_routes_on_boundary(self):
        for route in (compare_radical_exact, compare_radical_enclosure):
            assert route(471, self.BOUNDARY) is Comparison.GREATER
            assert route(470, self.BOUNDARY) is Comparison.LESS

    def test_equality_exact_route(self):
        rp = RadicalProduct(Fraction(3), ((16, 2),))
        assert compare_radical(12, rp) is Comparison.EQUAL
        assert compare_radical(13, rp) is Comparison.GREATER
        assert compare_radical(11, rp) is Comparison.LESS

    def test_equality_through_enclosure(self):
        rp = RadicalProduct(Fraction(3), ((16, 2),))
        assert compare_radical_enclosure(12, rp) is Comparison.EQUAL

    def test_plain_rational_comparison(self):
        rp = RadicalProduct(Fraction(20000, 3))
        assert compare_radical(6666, rp) is Comparison.LESS
        assert compare_radical(6667, rp) is Comparison.GREATER

    def test_rejects_nonpositive_lhs(self):
        with pytest.raises(ValidationError):
            compare_radical(0, self.BOUNDARY)

    def test_budget_exhaustion_falls_back(self):
        # With a one-digit budget the exact route is unaffordable; the
        # 200-digit enclosure still decides this comfortably.
        assert compare_radical(471, self.BOUNDARY, budget=1) is Comparison.GREATER
        assert compare_radical(470, self.BOUNDARY, budget=1) is Comparison.LESS

    def test_undecided_only_under_coarse_enclosure(self):
        # sqrt(999983) = 999.9915; a 1-digit enclosure is too coarse to
        # separate it from 1000, and only then may UNDECIDED appear.
        rp = RadicalProduct(Fraction(1), ((999983, 2),))
        assert compare_radical_enclosure(1000, rp, digits=1) is Comparison.UNDECIDED
        assert compare_radical_enclosure(1000, rp, digits=10) is Comparison.GREATER
        assert compare_radical(1000, rp, budget=1, fallback_digits=1) is Comparison.UNDECIDED
        assert compare_radical(1000, rp) is Comparison.GREATER

    def test_digit_budget_env(self, monkeypatch):
        monkeypatch.delenv("FLAGBOUND_DIGIT_BUDGET", raising=False)
        assert digit_budget() == 10**6
        monkeypatch.setenv("FLAGBOUND_DIGIT_BUDGET", "123")
        assert digit_budget() == 123
        monkeypatch.setenv("FLAGBOUND_DIGIT_BUDGET", "zero")
        with pytest.raises(ValidationError):
            digit_budget()
        monkeypatch.setenv("FLAGBOUND_DIGIT_BUDGET", "-5")
        with pytest.raises(ValidationError):
            digit_budget()

    @given(
        st.integers(min_value=1, max_value=10**6),
        st.integers(min_value=1, max_value=1000),
        st.integers(min_value=1, max_value=50),
        st.lists(
            st.tuples(
                st.integers(min_value=1, max_value=10**4),
                st.integers(min_value=1, max_value=5),
            ),
            max_size=3,
        ),
    )
    @settings(max_examples=150, deadline=None)
    def test_routes_agree_when_enclosure_decides(self, lhs, num, den, factors):
        rhs = RadicalProduct(Fraction(num, den), tuple(factors))
        exact = compare_radical_exact(lhs, rhs)
        enclosed = compare_radical_enclosure(lhs, rhs, digits=60)
        if enclosed is not Comparison.UNDECIDED:
            assert enclosed is exact
