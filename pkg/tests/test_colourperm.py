"""Coloured permutation counts against the enumeration oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedstirling import colourperm, exactmath, oracle

profiles = st.lists(st.integers(0, 3), min_size=0, max_size=3).map(tuple)


class TestColouredCount:
    def test_examples(self):
        assert colourperm.coloured_count(3, (1, 1)) == 6
        assert colourperm.coloured_count(0, ()) == 1
        assert colourperm.coloured_count(4, (1, 1)) == 22

    def test_degenerate(self):
        assert colourperm.coloured_count(2, (0, 0)) == 0
        assert colourperm.coloured_count(0, (0, 0)) == 1
        assert colourperm.coloured_count(3, (4,)) == 0

    def test_single_colour_is_stirling(self):
        for n in range(8):
            for m in range(n + 1):
                assert colourperm.coloured_count(n, (m,)) == exactmath.stirling1(n, m)

    def test_oracle_agreement(self):
        for n in range(7):
            for t1 in range(4):
                for t2 in range(3):
                    for t3 in range(3):
                        profile = (t1, t2, t3)
                        if sum(profile) > n:
                            continue
                        assert colourperm.coloured_count(n, profile) == oracle.count_coloured(
                            n, profile
                        ), (n, profile)

    @settings(max_examples=50)
    @given(st.integers(0, 7), profiles, st.randoms(use_true_random=False))
    def test_colour_permutation_symmetry(self, n, profile, rng):
        shuffled = list(profile)
        rng.shuffle(shuffled)
        assert colourperm.coloured_count(n, profile) == colourperm.coloured_count(n, tuple(shuffled))

    @settings(max_examples=40)
    @given(st.integers(0, 7), profiles)
    def test_appending_zero_colour_is_neutral(self, n, profile):
        assert colourperm.coloured_count(n, profile + (0,)) == colourperm.coloured_count(n, profile)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            colourperm.coloured_count(3, (-1, 2))


class TestRecurrence:
    def test_examples(self):
        assert colourperm.coloured_count_rec(3, (1, 1)) == 6
        assert colourperm.coloured_count_rec(1, (1,)) == 1
        assert colourperm.coloured_count_rec(2, (0, 0)) == 0

    @settings(max_examples=60)
    @given(st.integers(0, 8), profiles)
    def test_matches_convolution(self, n, profile):
        assert colourperm.coloured_count_rec(n, profile) == colourperm.coloured_count(n, profile)


class TestAtMost:
    def test_examples(self):
        assert colourperm.coloured_atmost(2, (1, 1)) == 4
        assert colourperm.coloured_atmost(0, (5, 5)) == 1
        assert colourperm.coloured_atmost(3, (3,)) == 6

    def test_inversion_examples(self):
        assert colourperm.coloured_from_atmost(1, (1,)) == 1
        assert colourperm.coloured_from_atmost(3, (1, 1)) == 6
        assert colourperm.coloured_from_atmost(2, (2,)) == 1

    def test_inversion_recovers_count(self):
        for n in range(6):
            for t1 in range(3):
                for t2 in range(3):
                    profile = (t1, t2)
                    assert colourperm.coloured_from_atmost(n, profile) == colourperm.coloured_count(
                        n, profile
                    )

    def test_paper_literal_fails_on_singleton(self):
        # the printed inclusion-exclusion yields -1 where the count is 1
        assert colourperm.coloured_from_atmost(1, (1,), paper_literal=True) == -1
        assert colourperm.coloured_from_atmost(1, (1,)) == 1


class TestDistinctColoured:
    def test_examples(self):
        assert colourperm.distinct_coloured(4, 2) == 22
        for n in range(7):
            assert colourperm.distinct_coloured(n, n) == exactmath.factorial(n)

    def test_prefix_of_a006252(self):
        assert sum(colourperm.distinct_coloured(3, k) for k in range(1, 4)) == 14

    def test_recurrence_agrees(self):
        for n in range(12):
            for k in range(n + 1):
                assert colourperm.distinct_coloured_rec(n, k) == colourperm.distinct_coloured(n, k)

    def test_equals_all_ones_profile(self):
        for n in range(7):
            for k in range(1, n + 1):
                assert colourperm.distinct_coloured(n, k) == colourperm.coloured_count(n, (1,) * k)
