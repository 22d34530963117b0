"""Brute-force enumeration oracles.

Every counting formula in the package is adjudicated against the counts
produced here, which enumerate the underlying objects (permutations in
cycle form, set partitions, colour assignments) one by one. Nothing in
this module uses a closed formula beyond iterating choices.

Enumeration is capped: the default limit is 8 elements and can be
overridden with the MIXEDSTIRLING_ORACLE_LIMIT environment variable.
"""

from __future__ import annotations

import itertools
import os
from typing import Callable, Iterator, Optional

from .restricted import SizeSet

__all__ = [
    "OracleLimitError",
    "oracle_limit",
    "enumerate_permutations",
    "set_partitions",
    "count_coloured",
    "count_mixed_partitions",
    "count_labelled_mixed_perms",
    "count_partitions_pinned",
    "count_list_partitions",
]

_DEFAULT_LIMIT = 8

Cycle = tuple[int, ...]
CycleDecomposition = tuple[Cycle, ...]


class OracleLimitError(RuntimeError):
    """Requested enumeration exceeds the configured brute-force limit."""


def oracle_limit() -> int:
    """Current enumeration cap (env override MIXEDSTIRLING_ORACLE_LIMIT)."""
    raw = os.environ.get("MIXEDSTIRLING_ORACLE_LIMIT")
    if raw is None:
        return _DEFAULT_LIMIT
    try:
        return int(raw)
    except ValueError:
        return _DEFAULT_LIMIT


def _check_limit(n: int, limit: Optional[int]) -> None:
    cap = oracle_limit() if limit is None else limit
    if n > cap:
        raise OracleLimitError(f"n={n} exceeds oracle limit {cap}")


def _cycles_of(perm: tuple[int, ...]) -> CycleDecomposition:
    # perm maps i -> perm[i-1]; canonical form: each cycle starts at its
    # least element, cycles sorted by least element.
    n = len(perm)
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = perm[start - 1]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = perm[x - 1]
        cycles.append(tuple(cyc))
    return tuple(cycles)


def enumerate_permutations(n: int, limit: Optional[int] = None) -> Iterator[CycleDecomposition]:
    """Yield each permutation of [n] once, as a canonical cycle decomposition."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_limit(n, limit)
    for image in itertools.permutations(range(1, n + 1)):
        yield _cycles_of(image)


_PERM_CACHE: dict[int, tuple[CycleDecomposition, ...]] = {}


def _all_decompositions(n: int, limit: Optional[int]) -> tuple[CycleDecomposition, ...]:
    if n not in _PERM_CACHE:
        _PERM_CACHE[n] = tuple(enumerate_permutations(n, limit))
    return _PERM_CACHE[n]


def _colourings(m: int, profile: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # All assignments of colours 1..k to cycle positions 0..m-1 with the
    # requested multiplicities: pick the position set of each colour in turn.
    def rec(positions: tuple[int, ...], colour: int, acc: dict[int, int]) -> Iterator[tuple[int, ...]]:
        if colour > len(profile):
            yield tuple(acc[i] for i in range(m))
            return
        want = profile[colour - 1]
        for chosen in itertools.combinations(positions, want):
            for p in chosen:
                acc[p] = colour
            rest = tuple(p for p in positions if p not in chosen)
            yield from rec(rest, colour + 1, acc)

    if sum(profile) != m:
        return
    yield from rec(tuple(range(m)), 1, {})


def _r_distinct(cycles: CycleDecomposition, r: int) -> bool:
    for cyc in cycles:
        if sum(1 for x in cyc if x <= r) > 1:
            return False
    return True


def count_coloured(
    n: int,
    profile: tuple[int, ...],
    size_set: Optional[SizeSet] = None,
    r: int = 0,
    limit: Optional[int] = None,
) -> int:
    """Count (permutation, colouring) pairs by exhaustion.

    A pair qualifies when every cycle length lies in size_set, the elements
    1..r sit in pairwise distinct cycles, and exactly profile[i-1] cycles
    carry colour i.
    """
    if n < 0 or r < 0 or any(t < 0 for t in profile):
        raise ValueError("indices must be nonnegative")
    _check_limit(n, limit)
    _check_limit(len(profile), limit)
    want_cycles = sum(profile)
    total = 0
    for cycles in _all_decompositions(n, limit):
        if len(cycles) != want_cycles:
            continue
        if size_set is not None and not all(len(c) in size_set for c in cycles):
            continue
        if r and not _r_distinct(cycles, r):
            continue
        for _assignment in _colourings(len(cycles), profile):
            total += 1
    return total


def set_partitions(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All set partitions of [n] via restricted growth strings."""
    if n == 0:
        yield ()
        return

    def rec(i: int, rgs: list[int], nblocks: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i > n:
            blocks: list[list[int]] = [[] for _ in range(nblocks)]
            for elem, b in enumerate(rgs, start=1):
                blocks[b].append(elem)
            yield tuple(tuple(b) for b in blocks)
            return
        for b in range(nblocks + 1):
            rgs.append(b)
            yield from rec(i + 1, rgs, max(nblocks, b + 1))
            rgs.pop()

    yield from rec(1, [], 0)


def count_mixed_partitions(
    n: int,
    k: int,
    t: int,
    labels_per_size: Callable[[int], int],
    limit: Optional[int] = None,
) -> int:
    """Count mixed set partitions: t unordered special blocks, k-1 ordered
    blocks, every block of size j painted with one of labels_per_size(j) colours."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_limit(n, limit)
    total = 0
    want = t + k - 1
    for blocks in set_partitions(n):
        if len(blocks) != want:
            continue
        idx = range(len(blocks))
        for special in itertools.combinations(idx, t):
            rest = [i for i in idx if i not in special]
            for _ordering in itertools.permutations(rest):
                for _labels in itertools.product(
                    *(range(int(labels_per_size(len(blocks[i])))) for i in idx)
                ):
                    total += 1
    return total


def count_labelled_mixed_perms(
    n: int,
    k: int,
    t: int,
    labels_per_size: Callable[[int], int],
    limit: Optional[int] = None,
) -> int:
    """Count mixed coloured permutations whose cycles carry an extra label:
    a cycle of length j offers labels_per_size(j) choices."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_limit(n, limit)
    total = 0
    want = t + k - 1
    for cycles in _all_decompositions(n, limit):
        if len(cycles) != want:
            continue
        idx = range(len(cycles))
        for special in itertools.combinations(idx, t):
            rest = [i for i in idx if i not in special]
            for _ordering in itertools.permutations(rest):
                for _labels in itertools.product(
                    *(range(int(labels_per_size(len(cycles[i])))) for i in idx)
                ):
                    total += 1
    return total


def count_partitions_pinned(n: int, k: int, r: int, limit: Optional[int] = None) -> int:
    """Count set partitions of [n] into k blocks with 1..r in distinct blocks."""
    if n < 0 or k < 0 or r < 0:
        raise ValueError("indices must be nonnegative")
    _check_limit(n, limit)
    total = 0
    for blocks in set_partitions(n):
        if len(blocks) != k:
            continue
        if all(sum(1 for x in b if x <= r) <= 1 for b in blocks):
            total += 1
    return total


def count_list_partitions(n: int, k: int, limit: Optional[int] = None) -> int:
    """Count partitions of [n] into k nonempty linearly ordered lists."""
    _check_limit(n, limit)
    total = 0
    for blocks in set_partitions(n):
        if len(blocks) != k:
            continue
        for _orderings in itertools.product(*(itertools.permutations(b) for b in blocks)):
            total += 1
    return total
