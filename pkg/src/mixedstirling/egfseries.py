"""Truncated formal power series over exact rationals, and the generating
function route to every counting family in the package.

Series are immutable: order-N arithmetic never reads or writes past x^N,
and multiplying two order-N series yields an order-N series. Coefficients
are stored plain (coefficient of x^i); the factor n! of the exponential
convention is applied only on extraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exactmath import factorial
from .restricted import SizeSet

__all__ = [
    "TruncatedSeries",
    "log_one_over_one_minus_x",
    "cyc_restricted",
    "weight_egf",
    "seq_of_cycles",
    "egf_extract",
    "egf_mixed",
    "egf_mixed_S",
    "egf_bellstar",
    "mixed_series",
    "bellstar_series",
    "series_rows",
]


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient list must have length order+1")

    @staticmethod
    def from_coeffs(order: int, coeffs) -> "TruncatedSeries":
        cs = [Fraction(c) for c in coeffs[: order + 1]]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        return TruncatedSeries(order, tuple(cs))

    @staticmethod
    def zero(order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_coeffs(order, [])

    @staticmethod
    def one(order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_coeffs(order, [1])

    def _match(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} != {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._match(other)
        return TruncatedSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._match(other)
        return TruncatedSeries(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._match(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(n, tuple(out))

    def __pow__(self, m: int) -> "TruncatedSeries":
        if m < 0:
            raise ValueError("negative powers not supported")
        result = TruncatedSeries.one(self.order)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def scale(self, q) -> "TruncatedSeries":
        q = Fraction(q)
        return TruncatedSeries(self.order, tuple(q * c for c in self.coeffs))


def log_one_over_one_minus_x(order: int) -> TruncatedSeries:
    """log(1/(1-x)) = sum_{m>=1} x^m/m: the EGF of a single cycle."""
    return TruncatedSeries(
        order, tuple(Fraction(0) if m == 0 else Fraction(1, m) for m in range(order + 1))
    )


def cyc_restricted(size_set: SizeSet, order: int) -> TruncatedSeries:
    """sum over allowed lengths s of x^s/s: one cycle of permitted length."""
    coeffs = [Fraction(0)] * (order + 1)
    for s in size_set.sizes_upto(order):
        coeffs[s] = Fraction(1, s)
    return TruncatedSeries(order, tuple(coeffs))


def weight_egf(a: Callable[[int], object], order: int) -> TruncatedSeries:
    """sum_{m>=1} a(m) x^m/m! for a weight sequence a."""
    coeffs = [Fraction(0)] + [Fraction(a(m)) / factorial(m) for m in range(1, order + 1)]
    return TruncatedSeries(order, tuple(coeffs))


def seq_of_cycles(order: int) -> TruncatedSeries:
    """1/(1 - log(1/(1-x))) as a truncated geometric sum: sequences of cycles."""
    log_series = log_one_over_one_minus_x(order)
    acc = TruncatedSeries.one(order)
    for _ in range(order):
        acc = TruncatedSeries.one(order) + log_series * acc
    return acc


def egf_extract(series: TruncatedSeries, n: int) -> Fraction:
    """n! times the coefficient of x^n: the count encoded at size n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > series.order:
        raise ValueError(f"n={n} exceeds series order {series.order}")
    return series.coeffs[n] * factorial(n)


def _extract_int(series: TruncatedSeries, n: int) -> int:
    value = egf_extract(series, n)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral count {value} extracted at n={n}")
    return int(value)


def _check_kt(k: int, t: int) -> None:
    if k < 1:
        raise ValueError("k must be >= 1")
    if t < 0:
        raise ValueError("t must be nonnegative")


def egf_mixed(n: int, k: int, t: int) -> int:
    """Mixed count via its EGF (1/t!) log(1/(1-x))^(t+k-1)."""
    _check_kt(k, t)
    if n < 0:
        raise ValueError("n must be nonnegative")
    series = log_one_over_one_minus_x(n) ** (t + k - 1)
    return _extract_int(series.scale(Fraction(1, factorial(t))), n)


def egf_mixed_S(n: int, k: int, t: int, size_set: SizeSet) -> int:
    """Restricted mixed count via (1/t!) (sum_{s in S} x^s/s)^(t+k-1)."""
    _check_kt(k, t)
    if n < 0:
        raise ValueError("n must be nonnegative")
    series = cyc_restricted(size_set, n) ** (t + k - 1)
    return _extract_int(series.scale(Fraction(1, factorial(t))), n)


def egf_bellstar(n: int, k: int, t: int, a: Callable[[int], object]) -> int:
    """Mixed-partition evaluation via (1/t!) (sum a_m x^m/m!)^(t+k-1)."""
    _check_kt(k, t)
    if n < 0:
        raise ValueError("n must be nonnegative")
    series = weight_egf(a, n) ** (t + k - 1)
    return _extract_int(series.scale(Fraction(1, factorial(t))), n)


def mixed_series(k: int, t: int, order: int, size_set: SizeSet | None = None) -> TruncatedSeries:
    """The whole generating function of the (restricted) mixed family."""
    _check_kt(k, t)
    base = log_one_over_one_minus_x(order) if size_set is None else cyc_restricted(size_set, order)
    return (base ** (t + k - 1)).scale(Fraction(1, factorial(t)))


def bellstar_series(k: int, t: int, order: int, a: Callable[[int], object]) -> TruncatedSeries:
    """The whole generating function of the weighted mixed-partition family."""
    _check_kt(k, t)
    return (weight_egf(a, order) ** (t + k - 1)).scale(Fraction(1, factorial(t)))


def series_rows(series: TruncatedSeries) -> list[dict]:
    """Dump rows {n, numerator, denominator, egf_value}; egf_value is an int
    when integral, else the exact fraction rendered as "p/q"."""
    rows = []
    for n, coeff in enumerate(series.coeffs):
        value = coeff * factorial(n)
        rows.append(
            {
                "n": n,
                "numerator": coeff.numerator,
                "denominator": coeff.denominator,
                "egf_value": int(value) if value.denominator == 1 else f"{value.numerator}/{value.denominator}",
            }
        )
    return rows
