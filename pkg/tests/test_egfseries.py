"""Truncated series arithmetic and the generating-function route."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedstirling import egfseries, exactmath, mixedcore, restricted
from mixedstirling.egfseries import TruncatedSeries
from mixedstirling.restricted import SizeSet

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)


def series_strategy(order: int):
    return st.lists(rationals, min_size=order + 1, max_size=order + 1).map(
        lambda cs: TruncatedSeries(order, tuple(Fraction(c) for c in cs))
    )


class TestArithmetic:
    def test_product_of_binomials(self):
        one_plus = TruncatedSeries.from_coeffs(2, [1, 1])
        one_minus = TruncatedSeries.from_coeffs(2, [1, -1])
        assert (one_plus * one_minus).coeffs == (1, 0, -1)

    def test_pow_zero_is_one(self):
        s = TruncatedSeries.from_coeffs(3, [0, 1, 2, 3])
        assert (s ** 0).coeffs == TruncatedSeries.one(3).coeffs

    def test_pow_picks_lowest_degree(self):
        log3 = egfseries.log_one_over_one_minus_x(3)
        assert (log3 ** 3).coeffs == (0, 0, 0, 1)

    def test_order_mismatch_rejected(self):
        with pytest.raises(ValueError):
            TruncatedSeries.one(3) + TruncatedSeries.one(4)

    @settings(max_examples=30)
    @given(series_strategy(5), series_strategy(5), series_strategy(5))
    def test_ring_laws(self, a, b, c):
        assert (a * b).coeffs == (b * a).coeffs
        assert ((a * b) * c).coeffs == (a * (b * c)).coeffs
        assert (a * (b + c)).coeffs == (a * b + a * c).coeffs

    @settings(max_examples=20)
    @given(series_strategy(4), st.integers(0, 5))
    def test_pow_is_iterated_mul(self, s, m):
        by_mul = TruncatedSeries.one(4)
        for _ in range(m):
            by_mul = by_mul * s
        assert (s ** m).coeffs == by_mul.coeffs


class TestConstructors:
    def test_log_series(self):
        s = egfseries.log_one_over_one_minus_x(3)
        assert s.coeffs == (0, 1, Fraction(1, 2), Fraction(1, 3))

    def test_cyc_restricted_all_equals_log(self):
        assert egfseries.cyc_restricted(SizeSet.all_sizes(), 6).coeffs == (
            egfseries.log_one_over_one_minus_x(6).coeffs
        )

    def test_cyc_restricted_evens(self):
        s = egfseries.cyc_restricted(SizeSet.evens(), 4)
        assert s.coeffs == (0, 0, Fraction(1, 2), 0, Fraction(1, 4))

    def test_cyc_restricted_singleton(self):
        s = egfseries.cyc_restricted(SizeSet.explicit([1]), 5)
        assert s.coeffs == (0, 1, 0, 0, 0, 0)


class TestExtraction:
    def test_examples(self):
        s = TruncatedSeries.from_coeffs(3, [0, 0, 0, Fraction(1, 2)])
        assert egfseries.egf_extract(s, 3) == 3
        assert egfseries.egf_extract(s, 0) == 0

    def test_beyond_order_rejected(self):
        with pytest.raises(ValueError):
            egfseries.egf_extract(TruncatedSeries.one(2), 3)

    def test_log_cubed_half(self):
        series = (egfseries.log_one_over_one_minus_x(3) ** 3).scale(Fraction(1, 2))
        assert egfseries.egf_extract(series, 3) == 3


class TestEgfMixed:
    def test_examples(self):
        assert egfseries.egf_mixed(3, 2, 2) == 3
        assert egfseries.egf_mixed(6, 3, 2) == 1020
        assert egfseries.egf_mixed(2, 1, 1) == 1

    def test_matches_closed_to_20(self):
        for n in range(21):
            for k in range(1, n + 1):
                for t in range(n - k + 2):
                    assert egfseries.egf_mixed(n, k, t) == mixedcore.mixed_closed(n, k, t)

    def test_k_zero_rejected(self):
        with pytest.raises(ValueError):
            egfseries.egf_mixed(3, 0, 1)


class TestEgfMixedRestricted:
    def test_all_sizes_reduces(self):
        for n in range(10):
            for k in range(1, n + 1):
                assert egfseries.egf_mixed_S(n, k, 1, SizeSet.all_sizes()) == egfseries.egf_mixed(n, k, 1)

    def test_evens_example(self):
        assert egfseries.egf_mixed_S(4, 2, 1, SizeSet.evens()) == 6

    def test_degree_too_low(self):
        assert egfseries.egf_mixed_S(4, 2, 2, SizeSet.at_least(2)) == 0

    def test_matches_recurrence_route(self):
        for S in [SizeSet.evens(), SizeSet.odds(), SizeSet.at_most(3), SizeSet.explicit([1, 3])]:
            for n in range(9):
                for k in range(1, 5):
                    for t in range(4):
                        if t + k - 1 <= n:
                            assert egfseries.egf_mixed_S(n, k, t, S) == restricted.mixed_S(n, k, t, S)


class TestSeqOfCycles:
    def test_a006252_prefix(self):
        series = egfseries.seq_of_cycles(8)
        values = [egfseries.egf_extract(series, n) for n in range(9)]
        assert values == [1, 1, 3, 14, 88, 694, 6578, 72792, 920904]

    def test_matches_distinct_coloured_sum(self):
        series = egfseries.seq_of_cycles(10)
        for n in range(1, 11):
            total = sum(
                exactmath.factorial(k) * exactmath.stirling1(n, k) for k in range(n + 1)
            )
            assert egfseries.egf_extract(series, n) == total


class TestSeriesRows:
    def test_rows_shape(self):
        rows = egfseries.series_rows(egfseries.mixed_series(2, 2, 4))
        assert rows[3] == {"n": 3, "numerator": 1, "denominator": 2, "egf_value": 3}
        assert rows[4] == {"n": 4, "numerator": 3, "denominator": 4, "egf_value": 18}

    def test_non_integral_rendered_as_fraction(self):
        rows = egfseries.series_rows(TruncatedSeries.from_coeffs(1, [0, Fraction(1, 2)]))
        assert rows[1]["egf_value"] == "1/2"
