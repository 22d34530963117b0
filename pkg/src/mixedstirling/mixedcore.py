"""Mixed Stirling numbers of the first kind.

A mixed coloured permutation of [n] uses k colours: t cycles share the
special colour and the remaining k-1 cycles carry k-1 pairwise distinct
colours. Each public function below computes the same family of numbers
through a genuinely different route (closed product, convolution, three
recurrences, two boundary-element sums, generating function via egfseries),
and the test suite holds them all to exact agreement.

Degenerate indices follow one policy everywhere: k = 0 is rejected, and the
count is 0 whenever t + k - 1 > n or (n > 0 and t + k - 1 = 0), 1 for the
empty permutation with no cycles to colour.
"""

from __future__ import annotations

from functools import lru_cache

from .exactmath import binomial, factorial, falling, stirling1

__all__ = [
    "mixed_closed",
    "mixed_conv",
    "mixed_rec_insert",
    "mixed_rec_cyclesize",
    "mixed_rec_marknonspecial",
    "mixed_rec_markspecial",
    "mixed_leader_sum_k",
    "mixed_leader_sum_t",
    "mixed_table",
]


def _check(n: int, k: int, t: int) -> None:
    if n < 0 or t < 0:
        raise ValueError("n and t must be nonnegative")
    if k < 1:
        raise ValueError("k must be >= 1 (one special colour plus k-1 distinct)")


def mixed_closed(n: int, k: int, t: int) -> int:
    """Reference path: arrange n elements into t+k-1 cycles, choose the t
    special ones, distribute the k-1 distinct colours: (t+k-1)_(k-1) c(n, t+k-1)."""
    _check(n, k, t)
    m = t + k - 1
    return falling(m, k - 1) * stirling1(n, m)


def mixed_conv(n: int, k: int, t: int) -> int:
    """Convolution path: j elements form the special cycles, the rest form
    k-1 distinctly coloured cycles."""
    _check(n, k, t)
    total = 0
    for j in range(t, n - k + 2):
        total += factorial(k - 1) * binomial(n, j) * stirling1(j, t) * stirling1(n - j, k - 1)
    return total


@lru_cache(maxsize=None)
def _rec_insert(n: int, k: int, t: int) -> int:
    m = t + k - 1
    if m > n:
        return 0
    if n == 0:
        return 1  # m == 0 here
    if m == 0:
        return 0
    total = (n - 1) * _rec_insert(n - 1, k, t)
    if t >= 1:
        total += _rec_insert(n - 1, k, t - 1)
    if k >= 2:
        total += (k - 1) * _rec_insert(n - 1, k - 1, t)
    return total


def mixed_rec_insert(n: int, k: int, t: int) -> int:
    """Recurrence on element n: special singleton, non-special singleton,
    or inserted into an existing cycle."""
    _check(n, k, t)
    return _rec_insert(n, k, t)


@lru_cache(maxsize=None)
def _rec_cyclesize(n: int, k: int, t: int) -> int:
    m = t + k - 1
    if m > n:
        return 0
    if m == 0:
        return 1 if n == 0 else 0
    if m == 1:
        # Single cycle in total: the summands below all reference a smaller
        # cycle count and vanish, so close the base directly.
        return stirling1(n, 1)
    total = 0
    for j in range(1, n):
        w = factorial(j - 1) * binomial(n - 1, j - 1)
        inner = 0
        if k >= 2:
            inner += (k - 1) * _rec_cyclesize(n - j, k - 1, t)
        if t >= 1:
            inner += _rec_cyclesize(n - j, k, t - 1)
        total += w * inner
    return total


def mixed_rec_cyclesize(n: int, k: int, t: int) -> int:
    """Recurrence on the size of the cycle containing element n."""
    _check(n, k, t)
    return _rec_cyclesize(n, k, t)


def mixed_rec_marknonspecial(n: int, k: int, t: int) -> int:
    """Mark one non-special cycle and peel it off; needs k >= 2."""
    _check(n, k, t)
    if k < 2:
        raise ValueError("marking a non-special cycle requires k >= 2")
    total = 0
    for j in range(1, n + 1):
        total += binomial(n, j) * factorial(j - 1) * mixed_closed(n - j, k - 1, t)
    return total


def mixed_rec_markspecial(n: int, k: int, t: int) -> int:
    """Mark one special cycle and peel it off; needs t >= 1. The marked sum
    counts each object t times, so the division must come out exact."""
    _check(n, k, t)
    if t < 1:
        raise ValueError("marking a special cycle requires t >= 1")
    rhs = 0
    for j in range(1, n + 1):
        rhs += binomial(n, j) * factorial(j - 1) * mixed_closed(n - j, k, t - 1)
    q, rem = divmod(rhs, t)
    if rem:
        raise ArithmeticError(f"mark-special sum not divisible by t={t} at (n={n}, k={k}, t={t})")
    return q


def mixed_leader_sum_k(n: int, k: int, t: int, paper_literal: bool = False) -> int:
    """Value with one extra distinct colour, by summing over the greatest
    cycle leader: returns the count for (n, k+1, t).

    The shipped form sums j up to n-1 with weight (n-1)!/j!, matching the
    insertion argument; paper_literal=True evaluates the printed variant
    (upper limit n, weight n!/j!), which overcounts and is kept only to
    document the discrepancy.
    """
    if n < 1 or k < 0 or t < 1:
        raise ValueError("requires n >= 1, k >= 0, t >= 1")
    m = t + k - 1
    colour_ways = falling(t + k, k)
    total = 0
    if paper_literal:
        for j in range(m, n + 1):
            total += (factorial(n) // factorial(j)) * stirling1(j, m) * colour_ways
    else:
        for j in range(m, n):
            total += (factorial(n - 1) // factorial(j)) * stirling1(j, m) * colour_ways
    return total


def mixed_leader_sum_t(n: int, k: int, t: int, paper_literal: bool = False) -> int:
    """Value with one extra special cycle, by the same boundary-element sum:
    returns the count for (n, k, t+1)."""
    if k < 1 or t < 0 or n < 0:
        raise ValueError("requires k >= 1, t >= 0, n >= 0")
    if n == 0:
        return 0  # t+1+k-1 >= 1 cycles cannot exist on an empty set
    m = t + k - 1
    colour_ways = falling(t + k, k - 1)
    total = 0
    if paper_literal:
        for j in range(m, n + 1):
            total += (factorial(n) // factorial(j)) * stirling1(j, m) * colour_ways
    else:
        for j in range(m, n):
            total += (factorial(n - 1) // factorial(j)) * stirling1(j, m) * colour_ways
    return total


def mixed_table(t: int, n_max: int) -> list[tuple[int, int, int]]:
    """Triangle entries (n, k, value) for t <= n <= n_max, 1 <= k <= n-t+1.

    Cells outside those ranges are omitted; in-range values are kept even
    when zero (renderers decide whether to blank them).
    """
    if t < 0 or n_max < 0:
        raise ValueError("t and n_max must be nonnegative")
    rows = []
    for n in range(t, n_max + 1):
        for k in range(1, n - t + 2):
            rows.append((n, k, mixed_closed(n, k, t)))
    return rows
