"""
Exhaustive verification of the generating identities and both constructions.

Every check is exact integer equality.  The unsigned and signed identities
are verified with two independent left-hand computations, a direct sweep
over S_n and a Stirling-table-weighted sum, against one shared product
formula on the right.  The bijection and involution checks sweep every
cycle-colored permutation below the configured size guard.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .codec import EncodedSequence, decode, encode
from .coloring import CycleColoredPermutation, Palette, enumerate_colorings
from .involution import phi
from .perm import (
    COLORED_ENUM_LIMIT,
    PERM_ENUM_LIMIT,
    LimitError,
    Permutation,
    effective_limit,
    enumerate_permutations,
)
from .stirling import falling_factorial, rising_factorial, stirling_table

__all__ = [
    "VerificationReport",
    "IDENTITIES",
    "default_palette",
    "enumerate_sequences",
    "verify_unsigned",
    "verify_signed",
    "verify_bijection",
    "verify_involution",
    "verify_identity",
]

IDENTITIES = ("eq1", "eq2", "bijection", "involution")

_BASE_LETTERS = ("r", "b", "g", "y", "o", "p", "m", "w", "t", "k")


def default_palette(x: int) -> Palette:
    """A palette of x distinct letters, starting r, b, g."""
    if x < 1:
        raise ValueError(f"palette size must be at least 1, got {x}")
    if x <= len(_BASE_LETTERS):
        return Palette(_BASE_LETTERS[:x])
    extra = tuple(f"c{i}" for i in range(1, x - len(_BASE_LETTERS) + 1))
    return Palette(_BASE_LETTERS + extra)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check at one parameter point.

    ``left`` and ``right`` are the two sides of the identity being compared;
    ``counterexample`` names the first offending object when the check fails.
    """

    identity: str
    n: int
    x: int
    left: int
    right: int
    passed: bool
    counterexample: str | None = None

    def to_json_dict(self) -> dict:
        doc = {
            "identity": self.identity,
            "n": self.n,
            "x": self.x,
            "left": str(self.left),
            "right": str(self.right),
            "pass": self.passed,
        }
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample
        return doc


@lru_cache(maxsize=None)
def _cycle_histogram(n: int) -> tuple[int, ...]:
    """hist[k] = number of permutations of [n] with k cycles, by enumeration."""
    hist = [0] * (n + 1)
    for p in enumerate_permutations(n, max_n=n):
        hist[p.cycle_count()] += 1
    return tuple(hist)


@lru_cache(maxsize=None)
def _table_row(n: int) -> tuple[int, ...]:
    return stirling_table(n).row(n)


def _check_perm_args(n: int, x: int, max_n: int | None) -> None:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if x < 0:
        raise ValueError(f"x must be nonnegative, got {x}")
    limit = effective_limit(PERM_ENUM_LIMIT, max_n)
    if n > limit:
        raise LimitError(f"identity check at n={n} exceeds the configured limit {limit}")


def verify_unsigned(n: int, x: int, max_n: int | None = None,
                    max_bits: int | None = None) -> VerificationReport:
    """Check sum of x^(cycle count) over S_n against the rising factorial.

    The sum is computed both from the enumeration histogram and from the
    Stirling table row, and both must equal the product.
    """
    _check_perm_args(n, x, max_n)
    hist = _cycle_histogram(n)
    direct = sum(hist[k] * x**k for k in range(n + 1))
    row = _table_row(n)
    weighted = sum(row[k] * x**k for k in range(n + 1))
    right = rising_factorial(x, n, max_bits)
    counterexample = None
    if direct != weighted:
        counterexample = f"enumeration sum {direct} != table-weighted sum {weighted}"
    elif direct != right:
        counterexample = f"cycle-count histogram {hist}"
    return VerificationReport("eq1", n, x, direct, right,
                              direct == weighted == right, counterexample)


def verify_signed(n: int, x: int, max_n: int | None = None,
                  max_bits: int | None = None) -> VerificationReport:
    """Check the signed sum over S_n against the falling factorial.

    Also checks the rearranged form: the even-parity weighted count equals
    the odd-parity one plus the falling factorial.
    """
    _check_perm_args(n, x, max_n)
    hist = _cycle_histogram(n)
    even = sum(hist[k] * x**k for k in range(n + 1) if (n - k) % 2 == 0)
    odd = sum(hist[k] * x**k for k in range(n + 1) if (n - k) % 2 == 1)
    direct = even - odd
    row = _table_row(n)
    weighted = sum((-1) ** (n - k) * row[k] * x**k for k in range(n + 1))
    right = falling_factorial(x, n, max_bits)
    counterexample = None
    if direct != weighted:
        counterexample = f"enumeration sum {direct} != table-weighted sum {weighted}"
    elif even != odd + right:
        counterexample = f"even-parity sum {even} != odd-parity sum {odd} + {right}"
    elif direct != right:
        counterexample = f"cycle-count histogram {hist}"
    return VerificationReport("eq2", n, x, direct, right,
                              direct == weighted == right and even == odd + right,
                              counterexample)


def _check_colored_args(n: int, palette: Palette, max_n: int | None) -> None:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    limit = effective_limit(COLORED_ENUM_LIMIT, max_n)
    if n > limit:
        raise LimitError(f"colored sweep at n={n} exceeds the configured limit {limit}")


def _all_colored(n: int, palette: Palette) -> Iterator[CycleColoredPermutation]:
    for p in enumerate_permutations(n, max_n=n):
        yield from enumerate_colorings(p, palette)


def enumerate_sequences(n: int, palette: Palette) -> Iterator[EncodedSequence]:
    """All injective length-n sequences over {2..n} plus the palette letters.

    This enumerates the codomain of encode() independently of it: there are
    exactly (x+n-1)(x+n-2)...x such sequences for a palette of size x.
    """
    alphabet = tuple(range(2, n + 1)) + palette.letters
    for entries in itertools.permutations(alphabet, n):
        yield EncodedSequence(entries)


def verify_bijection(n: int, palette: Palette,
                     max_n: int | None = None) -> VerificationReport:
    """Exhaustively check that encode is a bijection onto the valid sequences.

    Encodes every cycle-colored permutation over the palette, requires the
    outputs to be distinct, to use exactly the supporting letters, and to
    decode back; then requires the output set to cover every valid sequence.
    """
    _check_colored_args(n, palette, max_n)
    x = len(palette)
    right = rising_factorial(x, n)
    seen: dict[EncodedSequence, CycleColoredPermutation] = {}
    total = 0

    def fail(witness: str) -> VerificationReport:
        return VerificationReport("bijection", n, x, total, right, False, witness)

    for c in _all_colored(n, palette):
        s = encode(c)
        if s in seen:
            return fail(f"encode({c}) = encode({seen[s]}) = {s}")
        if set(s.letters()) != c.support():
            return fail(f"encode({c}) = {s} does not use exactly {sorted(c.support())}")
        back = decode(s)
        if back != c:
            return fail(f"decode(encode({c})) = {back}")
        seen[s] = c
        total += 1
    for s in enumerate_sequences(n, palette):
        if s not in seen:
            return fail(f"sequence {s} is never produced")
        del seen[s]
    if seen:
        return fail(f"encode produced a sequence outside the codomain: {next(iter(seen))}")
    return VerificationReport("bijection", n, x, total, right, total == right)


def verify_involution(n: int, palette: Palette,
                      max_n: int | None = None) -> VerificationReport:
    """Exhaustively check the involution: phi^2 = id, fixed points, sign flip.

    Fixed points must be exactly the identity permutation with all-distinct
    cycle colors, and their number must equal the falling factorial; every
    other object must map to a partner whose cycle count differs by one.
    """
    _check_colored_args(n, palette, max_n)
    x = len(palette)
    right = falling_factorial(x, n)
    fixed = 0

    def fail(witness: str) -> VerificationReport:
        return VerificationReport("involution", n, x, fixed, right, False, witness)

    for c in _all_colored(n, palette):
        image = phi(c)
        if image == c:
            fixed += 1
            if c.perm != Permutation.identity(n) or len(set(c.colors)) != n:
                return fail(f"unexpected fixed point {c}")
            continue
        if abs(image.perm.cycle_count() - c.perm.cycle_count()) != 1:
            return fail(f"phi({c}) = {image} changes the cycle count by more than one")
        if phi(image) != c:
            return fail(f"phi(phi({c})) = {phi(image)}")
    if fixed != right:
        return fail(f"{fixed} fixed points, expected {right}")
    return VerificationReport("involution", n, x, fixed, right, True)


def verify_identity(identity: str, n: int, x: int,
                    palette: Palette | None = None,
                    max_n: int | None = None,
                    max_bits: int | None = None) -> VerificationReport:
    """Dispatch a named identity check; colored checks build a default palette."""
    if identity == "eq1":
        return verify_unsigned(n, x, max_n, max_bits)
    if identity == "eq2":
        return verify_signed(n, x, max_n, max_bits)
    if identity in ("bijection", "involution"):
        pal = palette if palette is not None else default_palette(x)
        if len(pal) != x:
            raise ValueError(f"palette has {len(pal)} letters but x = {x}")
        check = verify_bijection if identity == "bijection" else verify_involution
        return check(n, pal, max_n)
    raise ValueError(f"unknown identity {identity!r}, expected one of {IDENTITIES}")
