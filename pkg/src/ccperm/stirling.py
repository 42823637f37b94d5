"""
Exact Stirling tables (first kind, unsigned) and factorial polynomials.

All arithmetic is exact.  Python integers widen instead of wrapping; passing
``max_bits`` additionally enforces a fixed-width budget and raises
WidthOverflowError (naming the offending entry) the moment any value would
exceed it, which is how fixed-width ports of these tables behave.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "WidthOverflowError",
    "StirlingTable",
    "stirling_table",
    "rising_factorial",
    "falling_factorial",
]


class WidthOverflowError(OverflowError):
    """An exact value exceeded the configured integer width."""


def _check_width(value: int, max_bits: int | None, what: str) -> int:
    if max_bits is not None and value.bit_length() > max_bits:
        raise WidthOverflowError(f"{what} = {value} exceeds {max_bits}-bit width")
    return value


@dataclass(frozen=True)
class StirlingTable:
    """Triangle of cycle-count numbers: rows[n][k] permutations of [n] with k cycles."""

    n_max: int
    rows: tuple[tuple[int, ...], ...]

    def value(self, n: int, k: int) -> int:
        if not 0 <= n <= self.n_max:
            raise ValueError(f"n must be in 0..{self.n_max}, got {n}")
        if k < 0 or k > n:
            return 0
        return self.rows[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        if not 0 <= n <= self.n_max:
            raise ValueError(f"n must be in 0..{self.n_max}, got {n}")
        return self.rows[n]


def stirling_table(n_max: int, max_bits: int | None = None) -> StirlingTable:
    """Build the triangle up to n_max by the standard recurrence.

    Each row extends the previous one: a permutation of [n] either inserts n
    into one of the n-1 positions after an existing element or adds it as a
    new fixed point.

    >>> stirling_table(4).row(4)
    (0, 6, 11, 6, 1)
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    rows = [(1,)]
    for n in range(1, n_max + 1):
        prev = rows[n - 1]
        row = []
        for k in range(n + 1):
            above = prev[k] if k <= n - 1 else 0
            left = prev[k - 1] if k >= 1 else 0
            row.append(_check_width(left + (n - 1) * above, max_bits, f"c({n},{k})"))
        rows.append(tuple(row))
    return StirlingTable(n_max, tuple(rows))


def rising_factorial(x: int, n: int, max_bits: int | None = None) -> int:
    """x(x+1)...(x+n-1); the empty product (n=0) is 1.

    >>> rising_factorial(2, 3)
    24
    """
    if x < 0 or n < 0:
        raise ValueError(f"arguments must be nonnegative, got x={x}, n={n}")
    product = 1
    for factor in range(x, x + n):
        product = _check_width(product * factor, max_bits, f"rising_factorial({x},{n})")
    return product


def falling_factorial(x: int, n: int, max_bits: int | None = None) -> int:
    """x(x-1)...(x-n+1); zero whenever 0 <= x < n.

    >>> falling_factorial(5, 3), falling_factorial(2, 3)
    (60, 0)
    """
    if x < 0 or n < 0:
        raise ValueError(f"arguments must be nonnegative, got x={x}, n={n}")
    product = 1
    for factor in range(x, x - n, -1):
        product = _check_width(product * factor, max_bits, f"falling_factorial({x},{n})")
    return product
