"""Every computation path of the core family, pinned to the published
triangle values and to each other."""

import pytest

from mixedstirling import colourperm, exactmath, mixedcore, oracle

# (n, k) -> value panels for t=2 and t=3 as published
PANEL_T2 = {
    (2, 1): 1,
    (3, 1): 3, (3, 2): 3,
    (4, 1): 11, (4, 2): 18, (4, 3): 12,
    (5, 1): 50, (5, 2): 105, (5, 3): 120, (5, 4): 60,
    (6, 1): 274, (6, 2): 675, (6, 3): 1020, (6, 4): 900, (6, 5): 360,
}
PANEL_T3 = {
    (3, 1): 1,
    (4, 1): 6, (4, 2): 4,
    (5, 1): 35, (5, 2): 40, (5, 3): 20,
    (6, 1): 225, (6, 2): 340, (6, 3): 300, (6, 4): 120,
    (7, 1): 1624, (7, 2): 2940, (7, 3): 3500, (7, 4): 2520, (7, 5): 840,
}

ALL_PATHS = [
    mixedcore.mixed_closed,
    mixedcore.mixed_conv,
    mixedcore.mixed_rec_insert,
    mixedcore.mixed_rec_cyclesize,
]


def grid(nmax):
    for n in range(nmax + 1):
        for k in range(1, n + 1):
            for t in range(n + 1):
                if t + k - 1 <= n:
                    yield n, k, t


class TestPanels:
    @pytest.mark.parametrize("nk,value", sorted(PANEL_T2.items()))
    def test_t2(self, nk, value):
        n, k = nk
        assert mixedcore.mixed_closed(n, k, 2) == value

    @pytest.mark.parametrize("nk,value", sorted(PANEL_T3.items()))
    def test_t3(self, nk, value):
        n, k = nk
        assert mixedcore.mixed_closed(n, k, 3) == value

    def test_table_t2_is_exactly_the_panel(self):
        entries = mixedcore.mixed_table(2, 6)
        assert {(n, k): v for n, k, v in entries} == PANEL_T2

    def test_table_t3_is_exactly_the_panel(self):
        entries = mixedcore.mixed_table(3, 7)
        assert {(n, k): v for n, k, v in entries} == PANEL_T3

    def test_table_t1_is_distinct_coloured(self):
        for n, k, v in mixedcore.mixed_table(1, 4):
            assert v == colourperm.distinct_coloured(n, k)


class TestClosed:
    def test_degenerate_policy(self):
        assert mixedcore.mixed_closed(0, 1, 0) == 1
        assert mixedcore.mixed_closed(3, 1, 0) == 0  # no cycles on 3 elements
        assert mixedcore.mixed_closed(2, 2, 3) == 0  # too many cycles
        with pytest.raises(ValueError):
            mixedcore.mixed_closed(4, 0, 2)

    def test_oracle_agreement(self):
        for n, k, t in grid(6):
            profile = (t,) + (1,) * (k - 1)
            assert mixedcore.mixed_closed(n, k, t) == oracle.count_coloured(n, profile), (n, k, t)

    def test_equals_coloured_count(self):
        for n, k, t in grid(7):
            profile = (t,) + (1,) * (k - 1)
            assert mixedcore.mixed_closed(n, k, t) == colourperm.coloured_count(n, profile)


class TestConv:
    def test_examples(self):
        assert mixedcore.mixed_conv(4, 2, 2) == 18
        assert mixedcore.mixed_conv(3, 1, 3) == 1
        assert mixedcore.mixed_conv(7, 5, 3) == 840


class TestRecInsert:
    def test_examples(self):
        assert mixedcore.mixed_rec_insert(4, 2, 2) == 18
        assert mixedcore.mixed_rec_insert(2, 1, 1) == 1
        assert mixedcore.mixed_rec_insert(6, 5, 2) == 360

    def test_step_decomposition(self):
        parts = (
            mixedcore.mixed_closed(3, 2, 1),
            1 * mixedcore.mixed_closed(3, 1, 2),
            3 * mixedcore.mixed_closed(3, 2, 2),
        )
        assert parts == (6, 3, 9)
        assert sum(parts) == mixedcore.mixed_rec_insert(4, 2, 2)


class TestRecCycleSize:
    def test_examples(self):
        assert mixedcore.mixed_rec_cyclesize(3, 2, 1) == 6
        assert mixedcore.mixed_rec_cyclesize(4, 2, 2) == 18
        assert mixedcore.mixed_rec_cyclesize(5, 3, 2) == 120

    def test_single_cycle_base(self):
        # both shapes with one cycle in total
        for n in range(1, 8):
            assert mixedcore.mixed_rec_cyclesize(n, 1, 1) == exactmath.factorial(n - 1)
            assert mixedcore.mixed_rec_cyclesize(n, 2, 0) == exactmath.factorial(n - 1)


class TestMarkRecurrences:
    def test_marknonspecial_examples(self):
        assert mixedcore.mixed_rec_marknonspecial(3, 2, 1) == 6
        assert mixedcore.mixed_rec_marknonspecial(4, 3, 2) == 12
        assert mixedcore.mixed_rec_marknonspecial(5, 2, 3) == 40

    def test_marknonspecial_requires_two_colours(self):
        with pytest.raises(ValueError):
            mixedcore.mixed_rec_marknonspecial(5, 1, 2)

    def test_markspecial_examples(self):
        assert mixedcore.mixed_rec_markspecial(3, 1, 2) == 3
        assert mixedcore.mixed_rec_markspecial(4, 2, 2) == 18
        assert mixedcore.mixed_rec_markspecial(6, 4, 2) == 900

    def test_markspecial_requires_special_cycle(self):
        with pytest.raises(ValueError):
            mixedcore.mixed_rec_markspecial(5, 2, 0)


class TestLeaderSums:
    def test_examples(self):
        assert mixedcore.mixed_leader_sum_k(3, 1, 2) == 3
        assert mixedcore.mixed_leader_sum_k(4, 1, 2) == 18
        assert mixedcore.mixed_leader_sum_k(3, 0, 3) == 1
        assert mixedcore.mixed_leader_sum_t(3, 1, 2) == 1
        assert mixedcore.mixed_leader_sum_t(5, 2, 2) == 40
        assert mixedcore.mixed_leader_sum_t(4, 2, 1) == 18

    def test_paper_literal_overcounts(self):
        # the printed sum gives 18 where the true value is 3
        assert mixedcore.mixed_leader_sum_k(3, 1, 2, paper_literal=True) == 18
        assert mixedcore.mixed_leader_sum_k(3, 1, 2) == 3


class TestCrossPathAgreement:
    def test_all_paths_small_grid(self):
        for n, k, t in grid(9):
            reference = mixedcore.mixed_closed(n, k, t)
            for fn in ALL_PATHS[1:]:
                assert fn(n, k, t) == reference, (fn.__name__, n, k, t)
            if k >= 2:
                assert mixedcore.mixed_rec_marknonspecial(n, k, t) == reference
            if t >= 1:
                assert mixedcore.mixed_rec_markspecial(n, k, t) == reference
                assert mixedcore.mixed_leader_sum_k(n, k - 1, t) == reference
                assert mixedcore.mixed_leader_sum_t(n, k, t - 1) == reference


class TestCorollaries:
    def test_i(self):
        for n in range(2, 11):
            for k in range(2, n + 1):
                assert mixedcore.mixed_closed(n, k, 0) == mixedcore.mixed_closed(n, k - 1, 1)

    def test_ii(self):
        for n in range(11):
            for t in range(n + 1):
                assert mixedcore.mixed_closed(n, 1, t) == exactmath.stirling1(n, t)

    def test_iii(self):
        for n in range(2, 11):
            assert mixedcore.mixed_closed(n, 1, n - 1) == exactmath.binomial(n, 2)

    def test_iv(self):
        for n in range(2, 11):
            assert mixedcore.mixed_closed(n, 2, n - 1) == n

    def test_v(self):
        for n in range(1, 11):
            for t in range(1, n + 1):
                assert mixedcore.mixed_closed(n, n - t + 1, t) == exactmath.factorial(n) // exactmath.factorial(t)
