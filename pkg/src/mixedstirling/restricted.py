"""Cycle-length-restricted counting: permutations whose every cycle length
lies in a prescribed set S, plus the mixed coloured variants.

The allowed-length set is a small immutable value (SizeSet) supporting
finite, cofinite, interval and parity shapes, with a text syntax used by
the CLI: "all", "evens", "odds", "<=m", ">=m", "{a,b,c}", "!{a,b,c}".
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

from .exactmath import binomial, factorial, falling

__all__ = [
    "SizeSet",
    "parse_size_set",
    "stirling1_S",
    "mixed_S",
    "mixed_S_conv",
    "mixed_S_marknonspecial",
    "mixed_S_markspecial",
    "mixed_S_cyclesize",
    "mixed_derangement",
    "extract_fixed_points",
    "extract_u_cycles",
]


@dataclass(frozen=True)
class SizeSet:
    """Set of allowed cycle lengths (positive integers only).

    kind is one of all/evens/odds/atmost/atleast/explicit/complement;
    `removed` holds lengths struck out by without(), used by the extraction
    identities that pass from S to S minus {u}.
    """

    kind: str
    bound: int = 0
    values: frozenset = field(default_factory=frozenset)
    removed: frozenset = field(default_factory=frozenset)

    # -- constructors ---------------------------------------------------

    @staticmethod
    def all_sizes() -> "SizeSet":
        return SizeSet("all")

    @staticmethod
    def evens() -> "SizeSet":
        return SizeSet("evens")

    @staticmethod
    def odds() -> "SizeSet":
        return SizeSet("odds")

    @staticmethod
    def at_most(m: int) -> "SizeSet":
        if m < 0:
            raise ValueError("at_most bound must be nonnegative")
        return SizeSet("atmost", bound=m)

    @staticmethod
    def at_least(m: int) -> "SizeSet":
        if m < 1:
            raise ValueError("at_least bound must be positive")
        return SizeSet("atleast", bound=m)

    @staticmethod
    def explicit(values) -> "SizeSet":
        vals = frozenset(int(v) for v in values)
        if any(v < 1 for v in vals):
            raise ValueError("explicit sizes must be positive")
        return SizeSet("explicit", values=vals)

    @staticmethod
    def complement(values) -> "SizeSet":
        vals = frozenset(int(v) for v in values)
        if any(v < 1 for v in vals):
            raise ValueError("forbidden sizes must be positive")
        return SizeSet("complement", values=vals)

    # -- queries ---------------------------------------------------------

    def __contains__(self, s: int) -> bool:
        if s < 1 or s in self.removed:
            return False
        if self.kind == "all":
            return True
        if self.kind == "evens":
            return s % 2 == 0
        if self.kind == "odds":
            return s % 2 == 1
        if self.kind == "atmost":
            return s <= self.bound
        if self.kind == "atleast":
            return s >= self.bound
        if self.kind == "explicit":
            return s in self.values
        return s not in self.values  # complement

    def sizes_upto(self, n: int) -> list[int]:
        return [s for s in range(1, n + 1) if s in self]

    def without(self, u: int) -> "SizeSet":
        """The same set with length u struck out."""
        if self.kind == "explicit":
            return SizeSet("explicit", values=self.values - {u}, removed=self.removed)
        return SizeSet(self.kind, self.bound, self.values, self.removed | {u})

    def to_text(self) -> str:
        if self.kind in ("all", "evens", "odds"):
            base = self.kind
        elif self.kind == "atmost":
            base = f"<={self.bound}"
        elif self.kind == "atleast":
            base = f">={self.bound}"
        elif self.kind == "explicit":
            base = "{" + ",".join(str(v) for v in sorted(self.values)) + "}"
        else:
            base = "!{" + ",".join(str(v) for v in sorted(self.values)) + "}"
        if self.removed:
            base += "-" + "{" + ",".join(str(v) for v in sorted(self.removed)) + "}"
        return base


def parse_size_set(text: str) -> SizeSet:
    """Parse the CLI size-set syntax."""
    s = text.strip().lower()
    if s == "all":
        return SizeSet.all_sizes()
    if s == "evens":
        return SizeSet.evens()
    if s == "odds":
        return SizeSet.odds()
    m = re.fullmatch(r"<=\s*(\d+)", s)
    if m:
        return SizeSet.at_most(int(m.group(1)))
    m = re.fullmatch(r">=\s*(\d+)", s)
    if m:
        return SizeSet.at_least(int(m.group(1)))
    m = re.fullmatch(r"(!?)\{([\d,\s]*)\}", s)
    if m:
        body = [p for p in m.group(2).replace(" ", "").split(",") if p]
        vals = [int(p) for p in body]
        return SizeSet.complement(vals) if m.group(1) else SizeSet.explicit(vals)
    raise ValueError(f"cannot parse size set {text!r}")


# -- S-restricted Stirling numbers of the first kind ----------------------


@lru_cache(maxsize=None)
def stirling1_S(n: int, k: int, size_set: SizeSet) -> int:
    """Permutations of [n] into k cycles, every cycle length in the set."""
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    # Classify by the length s of the cycle containing element n.
    total = 0
    for s in size_set.sizes_upto(n):
        total += factorial(s - 1) * binomial(n - 1, s - 1) * stirling1_S(n - s, k - 1, size_set)
    return total


def _check_kt(k: int, t: int) -> None:
    if k < 1:
        raise ValueError("k must be >= 1 (one special colour plus k-1 distinct)")
    if t < 0:
        raise ValueError("t must be nonnegative")


def mixed_S(n: int, k: int, t: int, size_set: SizeSet) -> int:
    """Mixed coloured permutations with all cycle lengths in the set
    (reference path: colour-choice factor times the restricted triangle)."""
    _check_kt(k, t)
    m = t + k - 1
    return falling(m, k - 1) * stirling1_S(n, m, size_set)


def mixed_S_conv(n: int, k: int, t: int, size_set: SizeSet) -> int:
    """Convolution path: split off the special-coloured cycles first."""
    _check_kt(k, t)
    total = 0
    for j in range(n + 1):
        total += (
            factorial(k - 1)
            * binomial(n, j)
            * stirling1_S(j, t, size_set)
            * stirling1_S(n - j, k - 1, size_set)
        )
    return total


def mixed_S_marknonspecial(n: int, k: int, t: int, size_set: SizeSet) -> int:
    """Recurrence path marking one non-special cycle; needs k >= 2."""
    _check_kt(k, t)
    if k < 2:
        raise ValueError("marking a non-special cycle requires k >= 2")
    total = 0
    for s in size_set.sizes_upto(n):
        total += binomial(n, s) * factorial(s - 1) * mixed_S(n - s, k - 1, t, size_set)
    return total


def mixed_S_markspecial(n: int, k: int, t: int, size_set: SizeSet, paper_literal: bool = False) -> int:
    """Recurrence path marking one special cycle; needs t >= 1.

    The shipped form divides a single (s-1)! weighted sum by t exactly; the
    paper_literal variant squares the factorial weight (and fails, which the
    identity suite documents).
    """
    _check_kt(k, t)
    if t < 1:
        raise ValueError("marking a special cycle requires t >= 1")
    rhs = 0
    for s in size_set.sizes_upto(n):
        w = binomial(n, s) * factorial(s - 1)
        if paper_literal:
            w *= factorial(s - 1)
        rhs += w * mixed_S(n - s, k, t - 1, size_set)
    q, rem = divmod(rhs, t)
    if rem:
        raise ArithmeticError(
            f"mark-special sum not divisible by t={t} at (n={n}, k={k}, t={t})"
        )
    return q


def mixed_S_cyclesize(n: int, k: int, t: int, size_set: SizeSet) -> int:
    """Recurrence path on the size of the cycle holding element n."""
    _check_kt(k, t)
    if n == 0:
        return 1 if t + k - 1 == 0 else 0
    total = 0
    for s in size_set.sizes_upto(n):
        w = factorial(s - 1) * binomial(n - 1, s - 1)
        inner = 0
        if k >= 2:
            inner += (k - 1) * mixed_S(n - s, k - 1, t, size_set)
        if t >= 1:
            inner += mixed_S(n - s, k, t - 1, size_set)
        total += w * inner
    return total


def mixed_derangement(n: int, k: int, t: int) -> int:
    """Mixed coloured permutations without fixed points."""
    return mixed_S(n, k, t, SizeSet.at_least(2))


def extract_fixed_points(n: int, k: int, t: int, size_set: SizeSet) -> int:
    """Rebuild the count by conditioning on coloured fixed points (1 in S)."""
    _check_kt(k, t)
    if 1 not in size_set:
        raise ValueError("fixed-point extraction requires 1 in the size set")
    reduced = size_set.without(1)
    total = 0
    for i in range(t + 1):
        for j in range(k):
            if i + j > n:
                continue
            ways = binomial(n, i) * binomial(n - i, j) * falling(k - 1, j)
            total += ways * mixed_S(n - i - j, k - j, t - i, reduced)
    return total


def extract_u_cycles(n: int, k: int, t: int, u: int, size_set: SizeSet) -> int:
    """Rebuild the count by conditioning on coloured cycles of length u."""
    _check_kt(k, t)
    if u not in size_set:
        raise ValueError(f"u-cycle extraction requires u={u} in the size set")
    reduced = size_set.without(u)
    total = 0
    for i in range(t + 1):
        for j in range(k):
            m = u * (i + j)
            if m > n:
                continue
            ways = (
                binomial(n, m)
                * factorial(m)
                // (u ** (i + j) * factorial(i) * factorial(j))
                * falling(k - 1, j)
            )
            total += ways * mixed_S(n - m, k - j, t - i, reduced)
    return total
