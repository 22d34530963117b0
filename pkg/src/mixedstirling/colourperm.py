"""Counts of coloured permutations: cycles of a permutation of [n] are
painted with colours 1..k so that exactly profile[i-1] cycles carry colour i.

Four independent computation routes are provided: the multinomial
convolution, the element-insertion recurrence, the "at most" cumulative
variant, and recovery from cumulative counts by Mobius inversion.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .exactmath import binomial, factorial, stirling1

__all__ = [
    "coloured_count",
    "coloured_count_rec",
    "coloured_atmost",
    "coloured_from_atmost",
    "distinct_coloured",
    "distinct_coloured_rec",
]

Profile = tuple[int, ...]


def _validate(n: int, profile) -> Profile:
    profile = tuple(int(t) for t in profile)
    if n < 0 or any(t < 0 for t in profile):
        raise ValueError("n and all colour multiplicities must be nonnegative")
    return profile


def coloured_count(n: int, profile) -> int:
    """Number of colourings by the multinomial convolution over the
    elements given to each colour. Colour i receives l_i elements arranged
    into profile[i-1] cycles; a colour with zero cycles gets no elements."""
    profile = _validate(n, profile)
    return _conv(n, profile)


def _conv(n: int, profile: Profile) -> int:
    if not profile:
        return 1 if n == 0 else 0
    t0, rest = profile[0], profile[1:]
    needed = sum(rest)
    if t0 == 0:
        # stirling1(l,0) vanishes except l=0
        return _conv(n, rest)
    total = 0
    for l0 in range(t0, n - needed + 1):
        total += binomial(n, l0) * stirling1(l0, t0) * _conv(n - l0, rest)
    return total


@lru_cache(maxsize=None)
def _rec(n: int, profile: Profile) -> int:
    if n == 0:
        return 1 if all(t == 0 for t in profile) else 0
    if sum(profile) > n:
        return 0
    total = (n - 1) * _rec(n - 1, profile)
    for j, tj in enumerate(profile):
        if tj >= 1:
            lowered = profile[:j] + (tj - 1,) + profile[j + 1 :]
            total += _rec(n - 1, lowered)
    return total


def coloured_count_rec(n: int, profile) -> int:
    """Same count by the recurrence on the placement of element n
    (singleton of some colour, or inserted into an existing cycle)."""
    profile = _validate(n, profile)
    return _rec(n, profile)


def coloured_atmost(n: int, profile) -> int:
    """Colourings using at most profile[i-1] cycles of colour i: the sum of
    coloured_count over the whole box of sub-profiles."""
    profile = _validate(n, profile)
    total = 0
    for sub in itertools.product(*(range(t + 1) for t in profile)):
        total += coloured_count(n, sub)
    return total


def coloured_from_atmost(n: int, profile, paper_literal: bool = False) -> int:
    """Recover the exact count from cumulative counts.

    The shipped route is Mobius inversion on the product of chains: only
    neighbours j_i in {t_i - 1, t_i} contribute, signed by the number of
    lowered coordinates. paper_literal=True evaluates the printed
    inclusion-exclusion sum instead (all 0 <= j_i <= t_i signed by the
    number of nonzero coordinates), which is wrong already at n=1,
    profile (1); it is kept for documentation of the discrepancy.
    """
    profile = _validate(n, profile)
    if paper_literal:
        total = 0
        for sub in itertools.product(*(range(t + 1) for t in profile)):
            sign = (-1) ** sum(1 for j in sub if j != 0)
            total += sign * coloured_atmost(n, sub)
        return total
    choices = [(t - 1, t) if t >= 1 else (0,) for t in profile]
    total = 0
    for sub in itertools.product(*choices):
        lowered = sum(1 for j, t in zip(sub, profile) if j == t - 1 and t >= 1)
        total += (-1) ** lowered * coloured_atmost(n, sub)
    return total


def distinct_coloured(n: int, k: int) -> int:
    """Permutations with k cycles, each cycle a different colour: k! c(n,k)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    return factorial(k) * stirling1(n, k)


@lru_cache(maxsize=None)
def distinct_coloured_rec(n: int, k: int) -> int:
    """The same by the fixed-point recurrence (independent route)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return k * distinct_coloured_rec(n - 1, k - 1) + (n - 1) * distinct_coloured_rec(n - 1, k)
