"""Named identity sweeps: every cross-path equality the package promises,
runnable over a bound and reported with stable names.

Names follow the source anchors used throughout the package docs (closed2,
recur1..recur4, genfun, genfunS, rsf-corrected, ...). Checks prefixed
paper-literal- evaluate the uncorrected printed forms; they are excluded by
default and are expected to FAIL when included - that failure, with its
counterexample, is the documentation of the discrepancy.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

from . import (
    bellpoly,
    colourperm,
    egfseries,
    exactmath,
    mixedcore,
    oracle,
    restricted,
    rstirling,
)
from .restricted import SizeSet

__all__ = [
    "IdentityReport",
    "identity_names",
    "oracle_family_names",
    "run_identities",
    "run_oracle_checks",
]

Case = tuple[tuple, object, object]  # (index point, expected, got)


@dataclass
class IdentityReport:
    name: str
    checks: int = 0
    failures: int = 0
    counterexample: Optional[dict] = field(default=None)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        out = {
            "name": self.name,
            "checks": self.checks,
            "failures": self.failures,
            "passed": self.passed,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _collect(name: str, cases: Iterator[Case]) -> IdentityReport:
    report = IdentityReport(name)
    for point, expected, got in cases:
        report.checks += 1
        if expected != got:
            report.failures += 1
            if report.counterexample is None:
                report.counterexample = {
                    "point": list(point),
                    "expected": str(expected),
                    "got": str(got),
                }
    return report


def _kt_grid(nmax: int) -> Iterator[tuple[int, int, int]]:
    for n in range(nmax + 1):
        for k in range(1, n + 1):
            for t in range(0, n + 1):
                if t + k - 1 <= n:
                    yield n, k, t


_S_MENU: list[SizeSet] = [
    SizeSet.all_sizes(),
    SizeSet.evens(),
    SizeSet.odds(),
    SizeSet.at_most(2),
    SizeSet.at_most(3),
    SizeSet.at_least(2),
    SizeSet.at_least(3),
    SizeSet.explicit([1, 3]),
]


# -- exactmath ------------------------------------------------------------


def _stirling1_recurrence(nmax: int) -> Iterator[Case]:
    for n in range(1, nmax + 1):
        for k in range(0, n + 1):
            lhs = exactmath.stirling1(n, k)
            rhs = exactmath.stirling1(n - 1, k - 1) + (n - 1) * exactmath.stirling1(n - 1, k)
            yield (n, k), rhs, lhs


def _stirling1_rowsum(nmax: int) -> Iterator[Case]:
    for n in range(nmax + 1):
        total = sum(exactmath.stirling1(n, k) for k in range(n + 1))
        yield (n,), exactmath.factorial(n), total


def _lah_closed(nmax: int) -> Iterator[Case]:
    tri = exactmath.Triangle("lah")
    for n in range(nmax + 1):
        for k in range(n + 1):
            yield (n, k), tri.value(n, k), exactmath.lah(n, k)


# -- colourperm -----------------------------------------------------------


def _profiles(nmax: int, colours: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    for n in range(nmax + 1):
        def rec(remaining: int, slots: int) -> Iterator[tuple[int, ...]]:
            if slots == 0:
                yield ()
                return
            for t in range(remaining + 1):
                for rest in rec(remaining - t, slots - 1):
                    yield (t,) + rest

        for profile in rec(n, colours):
            yield n, profile


def _genform_rec(nmax: int) -> Iterator[Case]:
    for colours in (1, 2, 3):
        for n, profile in _profiles(min(nmax, 7), colours):
            yield (n, profile), colourperm.coloured_count(n, profile), colourperm.coloured_count_rec(n, profile)


def _inclusion_exclusion(nmax: int, paper_literal: bool = False) -> Iterator[Case]:
    for colours in (1, 2):
        for n, profile in _profiles(min(nmax, 5), colours):
            got = colourperm.coloured_from_atmost(n, profile, paper_literal=paper_literal)
            yield (n, profile), colourperm.coloured_count(n, profile), got


def _ocrec(nmax: int) -> Iterator[Case]:
    for n in range(nmax + 1):
        for k in range(0, n + 1):
            yield (n, k), colourperm.distinct_coloured(n, k), colourperm.distinct_coloured_rec(n, k)


# -- mixedcore ------------------------------------------------------------


def _against_closed(fn: Callable[[int, int, int], int], nmax: int,
                    kmin: int = 1, tmin: int = 0) -> Iterator[Case]:
    for n, k, t in _kt_grid(nmax):
        if k < kmin or t < tmin:
            continue
        yield (n, k, t), mixedcore.mixed_closed(n, k, t), fn(n, k, t)


def _closed2(nmax: int) -> Iterator[Case]:
    return _against_closed(mixedcore.mixed_conv, nmax)


def _recur1(nmax: int) -> Iterator[Case]:
    return _against_closed(mixedcore.mixed_rec_cyclesize, nmax)


def _recur2(nmax: int) -> Iterator[Case]:
    return _against_closed(mixedcore.mixed_rec_insert, nmax)


def _recur3(nmax: int) -> Iterator[Case]:
    return _against_closed(mixedcore.mixed_rec_marknonspecial, nmax, kmin=2)


def _recur4(nmax: int) -> Iterator[Case]:
    return _against_closed(mixedcore.mixed_rec_markspecial, nmax, tmin=1)


def _leader_k(nmax: int, paper_literal: bool = False) -> Iterator[Case]:
    for n, k, t in _kt_grid(nmax):
        if t < 1 or n < 1:
            continue
        got = mixedcore.mixed_leader_sum_k(n, k - 1, t, paper_literal=paper_literal)
        yield (n, k, t), mixedcore.mixed_closed(n, k, t), got


def _leader_t(nmax: int, paper_literal: bool = False) -> Iterator[Case]:
    for n, k, t in _kt_grid(nmax):
        if t < 1:
            continue
        got = mixedcore.mixed_leader_sum_t(n, k, t - 1, paper_literal=paper_literal)
        yield (n, k, t), mixedcore.mixed_closed(n, k, t), got


def _corollaries(nmax: int) -> Iterator[tuple[str, Iterator[Case]]]:
    def cor_i() -> Iterator[Case]:
        for n in range(2, nmax + 1):
            for k in range(2, n + 1):
                yield (n, k), mixedcore.mixed_closed(n, k - 1, 1), mixedcore.mixed_closed(n, k, 0)

    def cor_ii() -> Iterator[Case]:
        for n in range(nmax + 1):
            for t in range(n + 1):
                yield (n, t), exactmath.stirling1(n, t), mixedcore.mixed_closed(n, 1, t)

    def cor_iii() -> Iterator[Case]:
        for n in range(2, nmax + 1):
            yield (n,), exactmath.binomial(n, 2), mixedcore.mixed_closed(n, 1, n - 1)

    def cor_iv() -> Iterator[Case]:
        for n in range(2, nmax + 1):
            yield (n,), n, mixedcore.mixed_closed(n, 2, n - 1)

    def cor_v() -> Iterator[Case]:
        for n in range(1, nmax + 1):
            for t in range(1, n + 1):
                yield (n, t), exactmath.factorial(n) // exactmath.factorial(t), mixedcore.mixed_closed(n, n - t + 1, t)

    yield "corollary-i", cor_i()
    yield "corollary-ii", cor_ii()
    yield "corollary-iii", cor_iii()
    yield "corollary-iv", cor_iv()
    yield "corollary-v", cor_v()


def _mixed_vs_coloured(nmax: int) -> Iterator[Case]:
    for n, k, t in _kt_grid(min(nmax, 9)):
        profile = (t,) + (1,) * (k - 1)
        yield (n, k, t), mixedcore.mixed_closed(n, k, t), colourperm.coloured_count(n, profile)


# -- egfseries ------------------------------------------------------------


def _genfun(nmax: int) -> Iterator[Case]:
    return _against_closed(egfseries.egf_mixed, nmax)


def _genfun_s(nmax: int) -> Iterator[Case]:
    for size_set in _S_MENU:
        for n, k, t in _kt_grid(min(nmax, 10)):
            if k > 5 or t > 5:
                continue
            lhs = restricted.mixed_S(n, k, t, size_set)
            got = egfseries.egf_mixed_S(n, k, t, size_set)
            yield (n, k, t, size_set.to_text()), lhs, got


def _genfun_s_stirling(nmax: int) -> Iterator[Case]:
    for size_set in _S_MENU:
        for n in range(min(nmax, 12) + 1):
            series = egfseries.cyc_restricted(size_set, n)
            for k in range(n + 1):
                val = egfseries.egf_extract(
                    (series ** k).scale(Fraction(1, exactmath.factorial(k))), n
                )
                yield (n, k, size_set.to_text()), Fraction(restricted.stirling1_S(n, k, size_set)), val


def _a006252(nmax: int) -> Iterator[Case]:
    if nmax < 1:
        return
    series = egfseries.seq_of_cycles(nmax)
    for n in range(1, nmax + 1):
        combinatorial = sum(
            exactmath.factorial(k) * exactmath.stirling1(n, k) for k in range(n + 1)
        )
        yield (n,), Fraction(combinatorial), egfseries.egf_extract(series, n)


# -- restricted -----------------------------------------------------------


def _s_grid(nmax: int) -> Iterator[tuple[int, int, int, SizeSet]]:
    for size_set in _S_MENU:
        for n in range(min(nmax, 10) + 1):
            for k in range(1, min(n, 4) + 1):
                for t in range(0, min(n, 4) + 1):
                    if t + k - 1 <= n:
                        yield n, k, t, size_set


def _closed2_s(nmax: int) -> Iterator[Case]:
    for n, k, t, size_set in _s_grid(nmax):
        lhs = restricted.mixed_S(n, k, t, size_set)
        yield (n, k, t, size_set.to_text()), lhs, restricted.mixed_S_conv(n, k, t, size_set)


def _recur3_s(nmax: int) -> Iterator[Case]:
    for n, k, t, size_set in _s_grid(nmax):
        if k < 2:
            continue
        lhs = restricted.mixed_S(n, k, t, size_set)
        yield (n, k, t, size_set.to_text()), lhs, restricted.mixed_S_marknonspecial(n, k, t, size_set)


def _recur4_s(nmax: int, paper_literal: bool = False) -> Iterator[Case]:
    for n, k, t, size_set in _s_grid(nmax):
        if t < 1:
            continue
        lhs = restricted.mixed_S(n, k, t, size_set)
        try:
            got = restricted.mixed_S_markspecial(n, k, t, size_set, paper_literal=paper_literal)
        except ArithmeticError:
            got = "inexact-division"
        yield (n, k, t, size_set.to_text()), lhs, got


def _recur1_s(nmax: int) -> Iterator[Case]:
    for n, k, t, size_set in _s_grid(nmax):
        lhs = restricted.mixed_S(n, k, t, size_set)
        yield (n, k, t, size_set.to_text()), lhs, restricted.mixed_S_cyclesize(n, k, t, size_set)


def _extract_1(nmax: int) -> Iterator[Case]:
    for n, k, t, size_set in _s_grid(min(nmax, 8)):
        if 1 not in size_set:
            continue
        lhs = restricted.mixed_S(n, k, t, size_set)
        yield (n, k, t, size_set.to_text()), lhs, restricted.extract_fixed_points(n, k, t, size_set)


def _extract_u(nmax: int) -> Iterator[Case]:
    for u in (1, 2, 3):
        for n, k, t, size_set in _s_grid(min(nmax, 8)):
            if u not in size_set:
                continue
            lhs = restricted.mixed_S(n, k, t, size_set)
            yield (n, k, t, u, size_set.to_text()), lhs, restricted.extract_u_cycles(n, k, t, u, size_set)


def _derangement_corollary(nmax: int) -> Iterator[Case]:
    for n, k, t in _kt_grid(min(nmax, 8)):
        lhs = mixedcore.mixed_closed(n, k, t)
        got = restricted.extract_fixed_points(n, k, t, SizeSet.all_sizes())
        yield (n, k, t), lhs, got


# -- rstirling ------------------------------------------------------------


def _rsf(nmax: int, paper_literal: bool = False) -> Iterator[Case]:
    for n in range(nmax + 1):
        for r in range(0, min(n, 3) + 1):
            for k in range(r, n + 1):
                lhs = rstirling.stirling1_r(n, k, r)
                got = rstirling.stirling1_r_conv_front(n, k, r, paper_literal=paper_literal)
                yield (n, k, r), lhs, got


def _rsf_symmetric(nmax: int, paper_literal: bool = False) -> Iterator[Case]:
    for n in range(nmax + 1):
        for r in range(0, min(n, 3) + 1):
            for k in range(r, n + 1):
                lhs = rstirling.stirling1_r(n, k, r)
                got = rstirling.stirling1_r_conv_back(n, k, r, paper_literal=paper_literal)
                yield (n, k, r), lhs, got


def _rmixed_doublesum(nmax: int) -> Iterator[Case]:
    for n, k, t in _kt_grid(min(nmax, 9)):
        for r in range(0, min(n, 3) + 1):
            lhs = rstirling.mixed_r_closed(n, k, t, r)
            yield (n, k, t, r), lhs, rstirling.mixed_r_doublesum(n, k, t, r)


# -- bellpoly -------------------------------------------------------------


def _bell_specialisations(nmax: int) -> Iterator[tuple[str, Iterator[Case]]]:
    def spec(name: str, weights: bellpoly.WeightSequence, target: Callable[[int, int], int]) -> Iterator[Case]:
        for n in range(min(nmax, 10) + 1):
            for k in range(n + 1):
                yield (n, k), target(n, k), bellpoly.bell_partial(n, k, weights)

    yield "bell-stirling2", spec("ones", bellpoly.WeightSequence.ones(), exactmath.stirling2)
    yield "bell-stirling1", spec("factshift", bellpoly.WeightSequence.fact_shift(), exactmath.stirling1)
    yield "bell-lah", spec("fact", bellpoly.WeightSequence.fact(), exactmath.lah)


def _bellstar_grid(nmax: int) -> Iterator[tuple[int, int, int]]:
    for n in range(min(nmax, 10) + 1):
        for k in range(1, min(n + 1, 5)):
            for t in range(0, min(n, 4) + 1):
                if t + k - 1 <= n:
                    yield n, k, t


def _bellstar_mixed(nmax: int) -> Iterator[Case]:
    fs = bellpoly.WeightSequence.fact_shift()
    for n, k, t in _bellstar_grid(nmax):
        yield (n, k, t), mixedcore.mixed_closed(n, k, t), bellpoly.bellstar(n, k, t, fs, fs)


def _bellstar_restricted(nmax: int) -> Iterator[Case]:
    for size_set in _S_MENU:
        weights = bellpoly.WeightSequence.characteristic_weighted(size_set)
        for n, k, t in _bellstar_grid(min(nmax, 8)):
            lhs = restricted.mixed_S(n, k, t, size_set)
            yield (n, k, t, size_set.to_text()), lhs, bellpoly.bellstar(n, k, t, weights, weights)


def _bellstar_routes(nmax: int) -> Iterator[Case]:
    presets = [
        bellpoly.WeightSequence.ones(),
        bellpoly.WeightSequence.fact_shift(),
        bellpoly.WeightSequence.fact(),
        bellpoly.WeightSequence.characteristic_weighted(SizeSet.evens()),
    ]
    for weights in presets:
        for n, k, t in _bellstar_grid(nmax):
            direct = bellpoly.bellstar(n, k, t, weights, weights)
            composed = bellpoly.bellstar_composition(n, k, t, weights)
            via_egf = egfseries.egf_bellstar(n, k, t, weights)
            yield (n, k, t, weights.name, "composition"), direct, composed
            yield (n, k, t, weights.name, "egf"), direct, via_egf


def _bell_r_reduction(nmax: int) -> Iterator[Case]:
    ones = bellpoly.WeightSequence.ones()
    for n in range(min(nmax, 10) + 1):
        for k in range(n + 1):
            lhs = bellpoly.bell_partial(n, k, ones)
            yield (n, k), lhs, bellpoly.bell_r_partial(n, k, 0, ones, ones)


def _bell_r_stirling1(nmax: int) -> Iterator[Case]:
    fs = bellpoly.WeightSequence.fact_shift()
    fact = bellpoly.WeightSequence.fact()
    for n in range(min(nmax, 8) + 1):
        for k in range(n + 1):
            for r in range(0, 4):
                lhs = rstirling.stirling1_r(n + r, k + r, r)
                yield (n, k, r), lhs, bellpoly.bell_r_partial(n, k, r, fs, fact)


# -- registry -------------------------------------------------------------

_IDENTITIES: dict[str, Callable[[int], Iterator[Case]]] = {
    "stirling1-recurrence": _stirling1_recurrence,
    "stirling1-rowsum": _stirling1_rowsum,
    "lah-closed": _lah_closed,
    "genform-rec": _genform_rec,
    "inclusion-exclusion-corrected": _inclusion_exclusion,
    "ocrec": _ocrec,
    "closed2": _closed2,
    "recur1": _recur1,
    "recur2": _recur2,
    "recur3": _recur3,
    "recur4": _recur4,
    "leader-sum-k-corrected": _leader_k,
    "leader-sum-t-corrected": _leader_t,
    "mixed-vs-genform": _mixed_vs_coloured,
    "genfun": _genfun,
    "genfunS": _genfun_s,
    "genfunS-stirling": _genfun_s_stirling,
    "a006252": _a006252,
    "closed2S": _closed2_s,
    "recur3S": _recur3_s,
    "recur4S-corrected": _recur4_s,
    "recur1S": _recur1_s,
    "extract-fixed-points": _extract_1,
    "extract-u-cycles": _extract_u,
    "derangement-corollary": _derangement_corollary,
    "rsf-corrected": _rsf,
    "rsf-symmetric-corrected": _rsf_symmetric,
    "rmixed-doublesum": _rmixed_doublesum,
    "bellstar-mixed": _bellstar_mixed,
    "bellstar-restricted": _bellstar_restricted,
    "bellstar-routes": _bellstar_routes,
    "bellr-reduction": _bell_r_reduction,
    "bellr-stirling1": _bell_r_stirling1,
}

_PAPER_LITERAL: dict[str, Callable[[int], Iterator[Case]]] = {
    "paper-literal-inclusion-exclusion": lambda nmax: _inclusion_exclusion(nmax, paper_literal=True),
    "paper-literal-leader-sum-k": lambda nmax: _leader_k(nmax, paper_literal=True),
    "paper-literal-leader-sum-t": lambda nmax: _leader_t(nmax, paper_literal=True),
    "paper-literal-recur4S": lambda nmax: _recur4_s(nmax, paper_literal=True),
    "paper-literal-rsf": lambda nmax: _rsf(nmax, paper_literal=True),
    "paper-literal-rsf-symmetric": lambda nmax: _rsf_symmetric(nmax, paper_literal=True),
}


def identity_names(include_paper_literal: bool = False) -> list[str]:
    names = list(_IDENTITIES) + [n for g in (_corollaries(0), _bell_specialisations(0)) for n, _ in g]
    if include_paper_literal:
        names += list(_PAPER_LITERAL)
    return names


def run_identities(nmax: int, include: tuple[str, ...] = (), names: Optional[tuple[str, ...]] = None) -> list[IdentityReport]:
    """Run the identity sweeps up to nmax.

    include: paper-literal check names to add; names: restrict to these.
    """
    unknown = [x for x in include if x not in _PAPER_LITERAL and x not in _IDENTITIES]
    if unknown:
        raise ValueError(f"unknown identities: {', '.join(unknown)}")
    reports = []
    for name, fn in _IDENTITIES.items():
        if names and name not in names:
            continue
        reports.append(_collect(name, fn(nmax)))
    for name, cases in _corollaries(nmax):
        if names and name not in names:
            continue
        reports.append(_collect(name, cases))
    for name, cases in _bell_specialisations(nmax):
        if names and name not in names:
            continue
        reports.append(_collect(name, cases))
    for name in include:
        if name in _PAPER_LITERAL:
            reports.append(_collect(name, _PAPER_LITERAL[name](nmax)))
    return reports


# -- oracle comparisons ----------------------------------------------------


def _oracle_genform(nmax: int) -> Iterator[Case]:
    for colours in (1, 2, 3):
        for n, profile in _profiles(min(nmax, 7), colours):
            lhs = oracle.count_coloured(n, profile)
            yield (n, profile), lhs, colourperm.coloured_count(n, profile)


def _oracle_mixed(nmax: int) -> Iterator[Case]:
    for n, k, t in _kt_grid(min(nmax, 7)):
        profile = (t,) + (1,) * (k - 1)
        lhs = oracle.count_coloured(n, profile)
        yield (n, k, t), lhs, mixedcore.mixed_closed(n, k, t)


def _oracle_restricted(nmax: int) -> Iterator[Case]:
    for size_set in _S_MENU:
        for n, k, t in _kt_grid(min(nmax, 7)):
            profile = (t,) + (1,) * (k - 1)
            lhs = oracle.count_coloured(n, profile, size_set)
            yield (n, k, t, size_set.to_text()), lhs, restricted.mixed_S(n, k, t, size_set)


def _oracle_rstirling(nmax: int) -> Iterator[Case]:
    for n in range(min(nmax, 7) + 1):
        for r in range(0, min(n, 3) + 1):
            for k in range(n + 1):
                lhs = oracle.count_coloured(n, (k,), None, r)
                yield (n, k, r), lhs, rstirling.stirling1_r(n, k, r)


def _oracle_rmixed(nmax: int) -> Iterator[Case]:
    for n, k, t in _kt_grid(min(nmax, 7)):
        profile = (t,) + (1,) * (k - 1)
        for r in range(0, min(n, 3) + 1):
            lhs = oracle.count_coloured(n, profile, None, r)
            yield (n, k, t, r), lhs, rstirling.mixed_r_closed(n, k, t, r)


def _oracle_bellstar(nmax: int) -> Iterator[Case]:
    menu: list[bellpoly.WeightSequence] = [
        bellpoly.WeightSequence.ones(),
        bellpoly.WeightSequence.characteristic_weighted(SizeSet.evens()),
        bellpoly.WeightSequence.explicit([1, 2, 1, 2, 1, 2, 1]),
    ]
    for weights in menu:
        for n, k, t in _bellstar_grid(min(nmax, 6)):
            lhs = oracle.count_mixed_partitions(n, k, t, weights)
            yield (n, k, t, weights.name), lhs, bellpoly.bellstar(n, k, t, weights, weights)


def _oracle_mihoubi(nmax: int) -> Iterator[Case]:
    patterns = [[1, 2, 1, 2, 1, 2], [2, 1, 2, 1, 2, 1], [2, 2, 1, 1, 1, 1]]
    for pattern in patterns:
        labels = bellpoly.WeightSequence.explicit(pattern)
        weighted = bellpoly.WeightSequence(
            "cycle:" + labels.name, lambda i, L=labels: exactmath.factorial(i - 1) * L(i)
        )
        for n, k, t in _bellstar_grid(min(nmax, 6)):
            lhs = oracle.count_labelled_mixed_perms(n, k, t, labels)
            yield (n, k, t, labels.name), lhs, bellpoly.bellstar(n, k, t, weighted, weighted)


def _oracle_bellr(nmax: int) -> Iterator[Case]:
    ones = bellpoly.WeightSequence.ones()
    for n in range(min(nmax, 6) + 1):
        for k in range(n + 1):
            for r in range(0, 3):
                lhs = oracle.count_partitions_pinned(n + r, k + r, r)
                yield (n, k, r), lhs, bellpoly.bell_r_partial(n, k, r, ones, ones)


def _oracle_basics(nmax: int) -> Iterator[Case]:
    n_cap = min(nmax, 7)
    for n in range(n_cap + 1):
        decomps = list(oracle.enumerate_permutations(n))
        yield ("count", n), exactmath.factorial(n), len(decomps)
        histogram: dict[int, int] = {}
        for d in decomps:
            histogram[len(d)] = histogram.get(len(d), 0) + 1
        for k in range(n + 1):
            yield ("cycles", n, k), exactmath.stirling1(n, k), histogram.get(k, 0)
    for n in range(min(nmax, 6) + 1):
        partitions = list(oracle.set_partitions(n))
        blocks: dict[int, int] = {}
        for p in partitions:
            blocks[len(p)] = blocks.get(len(p), 0) + 1
        for k in range(n + 1):
            yield ("blocks", n, k), exactmath.stirling2(n, k), blocks.get(k, 0)
        for k in range(n + 1):
            yield ("lists", n, k), exactmath.lah(n, k), oracle.count_list_partitions(n, k)


_ORACLE_FAMILIES: dict[str, Callable[[int], Iterator[Case]]] = {
    "basics": _oracle_basics,
    "genform": _oracle_genform,
    "mixed": _oracle_mixed,
    "restricted": _oracle_restricted,
    "rstirling": _oracle_rstirling,
    "rmixed": _oracle_rmixed,
    "bellstar": _oracle_bellstar,
    "mihoubi": _oracle_mihoubi,
    "bellr": _oracle_bellr,
}


def oracle_family_names() -> list[str]:
    return list(_ORACLE_FAMILIES)


def run_oracle_checks(nmax: int, family: Optional[str] = None) -> list[IdentityReport]:
    """Compare formula counts against exhaustive enumeration up to nmax."""
    if nmax > oracle.oracle_limit():
        raise oracle.OracleLimitError(
            f"nmax={nmax} exceeds oracle limit {oracle.oracle_limit()}"
        )
    if family is not None and family not in _ORACLE_FAMILIES:
        raise ValueError(f"unknown oracle family {family!r}")
    reports = []
    for name, fn in _ORACLE_FAMILIES.items():
        if family and name != family:
            continue
        reports.append(_collect(f"oracle-{name}", fn(nmax)))
    return reports
