"""
Permutations of [n] = {1, ..., n}.

Two text formats are supported:

- One-line notation: comma-separated images, ``"5,2,8,4,10,6,3,7,11,1,9"``
  meaning p(1)=5, p(2)=2, and so on.
- Cycle notation: ``"(1,5,10)(2)(3,8,7)(4)(6)(9,11)"``.  Fixed points must be
  written explicitly, so the cycles always cover 1..n where n is the largest
  element mentioned.

Cycle decompositions are always produced in canonical form: every cycle is
rotated so its minimum element comes first, and cycles are sorted by their
minimum element.
"""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation",
    "LimitError",
    "PERM_ENUM_LIMIT",
    "COLORED_ENUM_LIMIT",
    "MAX_N_ENV",
    "cycle_decomposition",
    "from_cycles",
    "apply_transposition",
    "enumerate_permutations",
    "parse_one_line",
    "parse_cycles",
    "format_cycles",
]

# Default guards for exhaustive enumeration.  Plain permutation sweeps stay
# cheap up to 8!; anything carrying colorings multiplies that by x^k, so the
# colored verifiers default lower.  CCPERM_MAX_N overrides both.
PERM_ENUM_LIMIT = 8
COLORED_ENUM_LIMIT = 6
MAX_N_ENV = "CCPERM_MAX_N"


class LimitError(RuntimeError):
    """An enumeration was requested beyond the configured size guard."""


def effective_limit(default: int, max_n: int | None = None) -> int:
    """Resolve a size guard: explicit argument, then environment, then default."""
    if max_n is not None:
        return max_n
    env = os.environ.get(MAX_N_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise LimitError(f"{MAX_N_ENV} must be an integer, got {env!r}") from None
    return default


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..n}, stored in one-line form.

    ``image[i-1]`` is the value the permutation takes at ``i``.

    >>> p = Permutation((2, 3, 1))
    >>> p(1), p(2), p(3)
    (2, 3, 1)
    >>> p.cycles()
    ((1, 2, 3),)
    """

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if n == 0:
            raise ValueError("permutation degree must be at least 1")
        if sorted(self.image) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.image}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"element {i} out of range 1..{self.n}")
        return self.image[i - 1]

    def preimage(self, v: int) -> int:
        """The unique i with p(i) = v."""
        if not 1 <= v <= self.n:
            raise ValueError(f"value {v} out of range 1..{self.n}")
        return self.image.index(v) + 1

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Canonical cycle decomposition (min-first cycles, sorted by minimum).

        >>> Permutation((5, 2, 8, 4, 10, 6, 3, 7, 11, 1, 9)).cycles()
        ((1, 5, 10), (2,), (3, 8, 7), (4,), (6,), (9, 11))
        """
        seen = [False] * self.n
        cycles = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            v = self.image[start - 1]
            while v != start:
                cycle.append(v)
                seen[v - 1] = True
                v = self.image[v - 1]
            cycles.append(tuple(cycle))
        return tuple(cycles)

    def cycle_count(self) -> int:
        """Number of cycles, counting fixed points as 1-cycles."""
        seen = [False] * self.n
        count = 0
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            count += 1
            v = start
            while not seen[v - 1]:
                seen[v - 1] = True
                v = self.image[v - 1]
        return count

    def one_line(self) -> str:
        return ",".join(str(v) for v in self.image)

    def __str__(self) -> str:
        return format_cycles(self)


def cycle_decomposition(p: Permutation) -> tuple[tuple[int, ...], ...]:
    """Canonical cycle decomposition of p; inverse of :func:`from_cycles`."""
    return p.cycles()


def _validate_cycle_cover(cycles: Iterable[Sequence[int]]) -> int:
    elements = [e for cycle in cycles for e in cycle]
    if not elements:
        raise ValueError("at least one cycle is required")
    n = max(elements)
    if sorted(elements) != list(range(1, n + 1)):
        raise ValueError(f"cycles must cover 1..{n} exactly, got {sorted(elements)}")
    return n


def from_cycles(cycles: Iterable[Sequence[int]]) -> Permutation:
    """Build the permutation whose disjoint cycles are the given ones.

    Cycles may be given in any rotation and any order; they must partition
    1..n for n the largest element, with fixed points listed explicitly.

    >>> from_cycles([(2, 4, 3), (1,), (5,)]).one_line()
    '1,4,2,3,5'
    """
    cycles = [tuple(c) for c in cycles]
    n = _validate_cycle_cover(cycles)
    image = [0] * n
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            image[a - 1] = b
    return Permutation(tuple(image))


def apply_transposition(i: int, j: int, p: Permutation) -> Permutation:
    """Left-multiply p by the transposition (i j): k -> (i j)(p(k)).

    Swapping two values in the one-line form either splits the cycle
    containing i and j (when they share a cycle of p) or merges their two
    cycles, so the cycle count always changes by exactly one.
    """
    if not (1 <= i < j <= p.n):
        raise ValueError(f"need 1 <= i < j <= {p.n}, got i={i}, j={j}")
    swapped = {i: j, j: i}
    return Permutation(tuple(swapped.get(v, v) for v in p.image))


def enumerate_permutations(n: int, max_n: int | None = None) -> Iterator[Permutation]:
    """Yield all of S_n in lexicographic order of one-line form.

    Guarded by ``max_n`` (default :data:`PERM_ENUM_LIMIT`, overridable via
    the CCPERM_MAX_N environment variable); exceeding it raises LimitError.
    """
    limit = effective_limit(PERM_ENUM_LIMIT, max_n)
    if n < 1:
        raise ValueError(f"degree must be at least 1, got {n}")
    if n > limit:
        raise LimitError(f"enumeration of S_{n} exceeds the configured limit {limit}")
    for image in itertools.permutations(range(1, n + 1)):
        yield Permutation(image)


# --- text formats -----------------------------------------------------------

_CYCLE_RE = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)")


def parse_one_line(text: str) -> Permutation:
    """Parse comma-separated one-line notation."""
    tokens = [t.strip() for t in text.strip().split(",")]
    try:
        image = tuple(int(t) for t in tokens)
    except ValueError:
        raise ValueError(f"one-line notation must be comma-separated integers: {text!r}") from None
    return Permutation(image)


def parse_cycles(text: str) -> Permutation:
    """Parse cycle notation such as ``"(1,5,10)(2)(3,8,7)"``.

    Whitespace is optional; elements must cover 1..n exactly for n the
    largest element (fixed points written explicitly).
    """
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty cycle notation")
    pos = 0
    cycles = []
    for match in _CYCLE_RE.finditer(stripped):
        if stripped[pos:match.start()].strip():
            raise ValueError(f"unexpected text in cycle notation: {stripped[pos:match.start()]!r}")
        cycles.append(tuple(int(t) for t in match.group(1).split(",")))
        pos = match.end()
    if stripped[pos:].strip():
        raise ValueError(f"unexpected text in cycle notation: {stripped[pos:]!r}")
    if not cycles:
        raise ValueError(f"no cycles found in {text!r}")
    return from_cycles(cycles)


def format_cycles(p: Permutation) -> str:
    """Canonical cycle notation, e.g. ``"(1,5,10)(2)(3,8,7)"``."""
    return "".join("(" + ",".join(str(e) for e in cycle) + ")" for cycle in p.cycles())
