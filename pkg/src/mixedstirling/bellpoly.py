"""Exponential partial Bell polynomials, their mixed variant with t special
blocks and k-1 ordered blocks, and the r-pinned evaluator.

Weight sequences assign a value to each positive block size; the presets
recover the classical specialisations (all-ones -> second-kind Stirling,
shifted factorials -> first-kind Stirling, factorials -> Lah).

Index convention of the r-pinned evaluator, fixed by brute force against
the pinned-partition and pinned-permutation oracles: n and k count only
the non-pinned weight, so the all-ones specialisation at (n, k, r) equals
the r-pinned second-kind number on n+r elements and k+r blocks, and the
(shifted factorial; factorial) pair equals the r-pinned first-kind number
on n+r elements and k+r cycles.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterator, Union

from .exactmath import factorial, multinomial
from .restricted import SizeSet

__all__ = [
    "WeightSequence",
    "parse_weights",
    "bell_partial",
    "bellstar",
    "bellstar_composition",
    "bell_r_partial",
]

Number = Union[int, Fraction]


class WeightSequence:
    """Weight a_i for each positive size i; sizes outside the support weigh 0."""

    def __init__(self, name: str, fn: Callable[[int], Number]):
        self.name = name
        self._fn = fn

    def __call__(self, i: int) -> Number:
        if i < 1:
            return 0
        return self._fn(i)

    def __repr__(self) -> str:
        return f"WeightSequence({self.name})"

    @staticmethod
    def ones() -> "WeightSequence":
        return WeightSequence("ones", lambda i: 1)

    @staticmethod
    def fact_shift() -> "WeightSequence":
        """a_i = (i-1)!: one weight per cycle on i elements."""
        return WeightSequence("factshift", lambda i: factorial(i - 1))

    @staticmethod
    def fact() -> "WeightSequence":
        """a_i = i!: one weight per ordered list on i elements."""
        return WeightSequence("fact", lambda i: factorial(i))

    @staticmethod
    def characteristic_weighted(size_set: SizeSet) -> "WeightSequence":
        """a_i = (i-1)! when i is an allowed size, else 0."""
        return WeightSequence(
            f"charS:{size_set.to_text()}",
            lambda i: factorial(i - 1) if i in size_set else 0,
        )

    @staticmethod
    def explicit(values) -> "WeightSequence":
        vals = [Fraction(v) for v in values]
        name = ",".join(str(v) for v in vals)
        return WeightSequence(name, lambda i: vals[i - 1] if i <= len(vals) else 0)


def parse_weights(text: str) -> WeightSequence:
    """Parse the CLI weight syntax: ones | factshift | fact | charS:<sizeset> | a1,a2,..."""
    from .restricted import parse_size_set

    s = text.strip().lower()
    if s == "ones":
        return WeightSequence.ones()
    if s == "factshift":
        return WeightSequence.fact_shift()
    if s == "fact":
        return WeightSequence.fact()
    if s.startswith("chars:"):
        return WeightSequence.characteristic_weighted(parse_size_set(s[len("chars:"):]))
    try:
        values = [Fraction(part) for part in s.split(",")]
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse weight sequence {text!r}") from None
    return WeightSequence.explicit(values)


def _partitions_exact(n: int, k: int, max_part: int | None = None) -> Iterator[list[int]]:
    """Integer partitions of n into exactly k positive parts, nonincreasing."""
    if k == 0:
        if n == 0:
            yield []
        return
    if n < k:
        return
    hi = n - k + 1 if max_part is None else min(max_part, n - k + 1)
    for p in range(hi, 0, -1):
        if p * k < n:
            break
        for rest in _partitions_exact(n - p, k - 1, p):
            yield [p] + rest


def _multiplicities(parts: list[int]) -> dict[int, int]:
    mult: dict[int, int] = {}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    return mult


def _as_count(value: Fraction) -> Number:
    return int(value) if value.denominator == 1 else value


def bell_partial(n: int, k: int, x: Callable[[int], Number]) -> Number:
    """Partial Bell polynomial B_{n,k} evaluated at the weight sequence x."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    total = Fraction(0)
    for parts in _partitions_exact(n, k):
        mult = _multiplicities(parts)
        term = Fraction(factorial(n))
        for size, count in mult.items():
            term *= Fraction(x(size)) ** count
            term /= factorial(count) * factorial(size) ** count
        total += term
    return _as_count(total)


def bellstar(
    n: int, k: int, t: int, x: Callable[[int], Number], y: Callable[[int], Number]
) -> Number:
    """Mixed partial Bell value: t unordered special blocks weighted by x,
    k-1 ordered blocks weighted by y."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < 0 or t < 0:
        raise ValueError("n and t must be nonnegative")
    total = Fraction(0)
    for a in range(n + 1):
        for sparts in _partitions_exact(a, t):
            smult = _multiplicities(sparts)
            sterm = Fraction(factorial(n))
            for size, count in smult.items():
                sterm *= Fraction(x(size)) ** count
                sterm /= factorial(count) * factorial(size) ** count
            if not sterm:
                continue
            for oparts in _partitions_exact(n - a, k - 1):
                omult = _multiplicities(oparts)
                term = sterm * factorial(k - 1)
                for size, count in omult.items():
                    term *= Fraction(y(size)) ** count
                    term /= factorial(count) * factorial(size) ** count
                total += term
    return _as_count(total)


def _compositions(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of m positive parts summing to n."""
    if m == 0:
        if n == 0:
            yield ()
        return
    for first in range(1, n - m + 2):
        for rest in _compositions(n - first, m - 1):
            yield (first,) + rest


def bellstar_composition(n: int, k: int, t: int, a: Callable[[int], Number]) -> Number:
    """Same mixed value with x = y = a, summed over ordered block-size
    compositions and divided by t! (the special blocks are unordered)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < 0 or t < 0:
        raise ValueError("n and t must be nonnegative")
    m = t + k - 1
    total = Fraction(0)
    for parts in _compositions(n, m):
        term = Fraction(multinomial(n, list(parts)))
        for p in parts:
            term *= Fraction(a(p))
        total += term
    if total.denominator == 1:
        q, rem = divmod(int(total), factorial(t))
        if rem:
            raise ArithmeticError(
                f"composition sum not divisible by t!={factorial(t)} at (n={n}, k={k}, t={t})"
            )
        return q
    return _as_count(total / factorial(t))


def bell_r_partial(
    n: int, k: int, r: int, x: Callable[[int], Number], y: Callable[[int], Number]
) -> Number:
    """r-pinned partial Bell value: k free blocks weighted by x, plus r
    pinned blocks whose non-pinned content (possibly empty) is weighted by y."""
    if n < 0 or k < 0 or r < 0:
        raise ValueError("indices must be nonnegative")
    total = Fraction(0)
    for b in range(n + 1):
        for fparts in _partitions_exact(b, k):
            fmult = _multiplicities(fparts)
            fterm = Fraction(factorial(n))
            for size, count in fmult.items():
                fterm *= Fraction(x(size)) ** count
                fterm /= factorial(count) * factorial(size) ** count
            if not fterm:
                continue
            for p in range(r + 1):
                for pparts in _partitions_exact(n - b, p):
                    pmult = _multiplicities(pparts)
                    term = fterm * factorial(r) / factorial(r - p)
                    for size, count in pmult.items():
                        term *= Fraction(y(size)) ** count
                        term /= factorial(count) * factorial(size) ** count
                    total += term
    return _as_count(total)
