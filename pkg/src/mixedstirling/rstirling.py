"""r-pinned counting: permutations whose first r elements lie in pairwise
distinct cycles, and the mixed coloured version.

The reference triangle is the plain recurrence seeded at n = r. The two
Lah-flavoured convolutions ship in corrected form: a pinned cycle may
receive an empty tail, so the filling weight is the weak-distribution
count D(l, r) = r(r+1)...(r+l-1) of l labelled items into r possibly-empty
ordered lists, not r! Lah(l, r). The printed nonempty-list forms are kept
behind paper_literal flags because the identity suite documents exactly
where they fail.
"""

from __future__ import annotations

from functools import lru_cache

from .exactmath import binomial, factorial, falling, lah, rising, stirling1
from .mixedcore import mixed_closed

__all__ = [
    "stirling1_r",
    "stirling1_r_conv_front",
    "stirling1_r_conv_back",
    "mixed_r_closed",
    "mixed_r_doublesum",
]


@lru_cache(maxsize=None)
def stirling1_r(n: int, k: int, r: int) -> int:
    """Permutations of [n] into k cycles with 1..r in distinct cycles."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if n < 0 or k < 0 or n < r or k < r or k > n:
        return 0
    if n == r:
        return 1 if k == r else 0
    return stirling1_r(n - 1, k - 1, r) + (n - 1) * stirling1_r(n - 1, k, r)


def stirling1_r_conv_front(n: int, k: int, r: int, paper_literal: bool = False) -> int:
    """Convolution filling the pinned cycles first, then building the rest."""
    if n < 0 or k < 0 or r < 0:
        raise ValueError("indices must be nonnegative")
    if n < r or k < r:
        return 0
    total = 0
    if paper_literal:
        for ell in range(0, min(n - k + 1, n - r) + 1):
            total += factorial(r) * binomial(n - r, ell) * lah(ell, r) * stirling1(n - r - ell, k - r)
    else:
        for ell in range(0, n - r + 1):
            total += binomial(n - r, ell) * rising(r, ell) * stirling1(n - r - ell, k - r)
    return total


def stirling1_r_conv_back(n: int, k: int, r: int, paper_literal: bool = False) -> int:
    """Symmetric convolution choosing the unpinned cycles' elements first."""
    if n < 0 or k < 0 or r < 0:
        raise ValueError("indices must be nonnegative")
    if n < r or k < r:
        return 0
    total = 0
    if paper_literal:
        for ell in range(max(k - r, 0), n - r + 1):
            total += factorial(r) * binomial(n - r, ell) * stirling1(ell, k - r) * lah(n - r - ell, r)
    else:
        for ell in range(0, n - r + 1):
            total += binomial(n - r, ell) * stirling1(ell, k - r) * rising(r, n - r - ell)
    return total


def mixed_r_closed(n: int, k: int, t: int, r: int) -> int:
    """r-pinned mixed count: colour-choice factor times the pinned triangle."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < 0 or t < 0 or r < 0:
        raise ValueError("indices must be nonnegative")
    m = t + k - 1
    return falling(m, k - 1) * stirling1_r(n, m, r)


def mixed_r_doublesum(n: int, k: int, t: int, r: int) -> int:
    """Independent double sum: colour the r pinned cycles (i of them special),
    build an unpinned mixed permutation on l of the remaining elements, and
    fill the pinned cycles with the rest as r possibly-empty ordered tails."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < 0 or t < 0 or r < 0:
        raise ValueError("indices must be nonnegative")
    if n < r:
        return 0
    total = 0
    for i in range(0, min(t, r) + 1):
        colour_ways = binomial(r, i) * binomial(k - 1, r - i) * factorial(r - i)
        if colour_ways == 0:
            continue
        inner_k = k - (r - i)
        inner_t = t - i
        for ell in range(0, n - r + 1):
            total += (
                colour_ways
                * binomial(n - r, ell)
                * rising(r, n - r - ell)
                * mixed_closed(ell, inner_k, inner_t)
            )
    return total
