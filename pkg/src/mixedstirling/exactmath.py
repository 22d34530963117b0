"""Exact integer kernels and the memoized classical triangles.

Everything here is plain Python arbitrary-precision integer arithmetic.
The triangles (signless first-kind Stirling, second-kind Stirling, Lah)
grow row by row on demand and never shrink.
"""

from __future__ import annotations

import math
import threading

__all__ = [
    "factorial",
    "binomial",
    "multinomial",
    "falling",
    "rising",
    "stirling1",
    "stirling2",
    "lah",
    "Triangle",
]


def factorial(n: int) -> int:
    """n! for n >= 0."""
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """n choose k; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial requires nonnegative arguments")
    return math.comb(n, k)


def multinomial(n: int, parts: list[int] | tuple[int, ...]) -> int:
    """n! / (l1! ... lk!) for parts summing to n."""
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"multinomial parts {list(parts)} do not sum to {n}")
    out = 1
    remaining = n
    for p in parts:
        out *= math.comb(remaining, p)
        remaining -= p
    return out


def falling(x: int, k: int) -> int:
    """Falling factorial x(x-1)...(x-k+1); 1 when k=0, 0 when k > x."""
    if x < 0 or k < 0:
        raise ValueError("falling requires nonnegative arguments")
    return math.perm(x, k)


def rising(x: int, k: int) -> int:
    """Rising factorial x(x+1)...(x+k-1); 1 when k=0."""
    if x < 0 or k < 0:
        raise ValueError("rising requires nonnegative arguments")
    if k == 0:
        return 1
    return math.perm(x + k - 1, k)


class Triangle:
    """Memoized number triangle, one of the three classical kinds.

    Rows are materialized whole, appended under a lock, and never mutated
    afterwards, so concurrent readers always see consistent values.
    """

    KINDS = ("stirling1", "stirling2", "lah")

    def __init__(self, kind: str):
        if kind not in self.KINDS:
            raise ValueError(f"unknown triangle kind {kind!r}")
        self.kind = kind
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    def _next_row(self, prev: list[int], n: int) -> list[int]:
        # Row n from row n-1; entry k of row n uses entries k-1 and k of prev.
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            above_left = prev[k - 1]
            above = prev[k] if k < n else 0
            if self.kind == "stirling1":
                row[k] = above_left + (n - 1) * above
            elif self.kind == "stirling2":
                row[k] = above_left + k * above
            else:  # lah
                row[k] = above_left + (n - 1 + k) * above
        return row

    def value(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    m = len(self._rows)
                    self._rows.append(self._next_row(self._rows[m - 1], m))
        return self._rows[n][k]


_STIRLING1 = Triangle("stirling1")
_STIRLING2 = Triangle("stirling2")


def stirling1(n: int, k: int) -> int:
    """Signless Stirling number of the first kind: permutations of [n] with k cycles."""
    return _STIRLING1.value(n, k)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind: set partitions of [n] into k blocks."""
    return _STIRLING2.value(n, k)


def lah(n: int, k: int) -> int:
    """Lah number: partitions of [n] into k nonempty linearly ordered lists."""
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return binomial(n - 1, k - 1) * factorial(n) // factorial(k)
