"""
Palettes and cycle-colored permutations.

A coloring assigns one palette letter to each cycle of a permutation's
canonical decomposition.  Colors are stored in canonical cycle order, so the
color of a cycle is equivalently keyed by the cycle's minimum element.

Color labels follow the grammar ``[A-Za-z][A-Za-z0-9_]*``, which keeps them
disjoint from the integer tokens used in encoded sequences.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .perm import Permutation, from_cycles

__all__ = [
    "LABEL_RE",
    "Palette",
    "CycleColoredPermutation",
    "enumerate_colorings",
    "to_json_dict",
    "from_json_dict",
    "from_json",
]

LABEL_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def _check_label(label: str) -> str:
    if not isinstance(label, str) or not LABEL_RE.match(label):
        raise ValueError(f"invalid color label {label!r}")
    return label


@dataclass(frozen=True)
class Palette:
    """An ordered list of distinct color labels.

    The order only matters for serialization (letter order in DOT output,
    odometer order when enumerating colorings); the constructions themselves
    never depend on it.
    """

    letters: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise ValueError("palette must contain at least one letter")
        for letter in self.letters:
            _check_label(letter)
        if len(set(self.letters)) != len(self.letters):
            raise ValueError(f"palette letters must be distinct: {self.letters}")

    @classmethod
    def parse(cls, text: str) -> "Palette":
        """Parse a comma-separated letter list such as ``"r,b,g"``."""
        return cls(tuple(t.strip() for t in text.split(",")))

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __contains__(self, label: object) -> bool:
        return label in self.letters


@dataclass(frozen=True)
class CycleColoredPermutation:
    """A permutation together with one color per canonical cycle.

    ``colors[t]`` is the color of ``perm.cycles()[t]``.

    >>> c = CycleColoredPermutation(Permutation((1, 4, 2, 3, 5)), ("r", "b", "r"))
    >>> c.color_of(3)
    'b'
    >>> sorted(c.support())
    ['b', 'r']
    """

    perm: Permutation
    colors: tuple[str, ...]

    def __post_init__(self) -> None:
        k = self.perm.cycle_count()
        if len(self.colors) != k:
            raise ValueError(f"expected {k} colors, one per cycle, got {len(self.colors)}")
        for color in self.colors:
            _check_label(color)

    @classmethod
    def from_mapping(cls, perm: Permutation, mapping: Mapping[int, str]) -> "CycleColoredPermutation":
        """Build from a map keyed by cycle minimum element."""
        cycles = perm.cycles()
        minima = [cycle[0] for cycle in cycles]
        if set(mapping) != set(minima):
            raise ValueError(
                f"coloring keys {sorted(mapping)} do not match cycle minima {minima}"
            )
        return cls(perm, tuple(mapping[m] for m in minima))

    @property
    def n(self) -> int:
        return self.perm.n

    def colored_cycles(self) -> tuple[tuple[tuple[int, ...], str], ...]:
        return tuple(zip(self.perm.cycles(), self.colors))

    def coloring(self) -> dict[int, str]:
        """The color assignment keyed by cycle minimum element."""
        return {cycle[0]: color for cycle, color in self.colored_cycles()}

    def color_of(self, element: int) -> str:
        for cycle, color in self.colored_cycles():
            if element in cycle:
                return color
        raise ValueError(f"element {element} out of range 1..{self.n}")

    def color_classes(self) -> dict[str, set[int]]:
        """For each used color, the set of elements in cycles of that color."""
        classes: dict[str, set[int]] = {}
        for cycle, color in self.colored_cycles():
            classes.setdefault(color, set()).update(cycle)
        return classes

    def support(self) -> set[str]:
        """The set of colors actually used on some cycle."""
        return set(self.colors)

    def __str__(self) -> str:
        return "".join(
            "(" + ",".join(str(e) for e in cycle) + ")" + color
            for cycle, color in self.colored_cycles()
        )


def enumerate_colorings(p: Permutation, palette: Palette) -> Iterator[CycleColoredPermutation]:
    """Yield all x^k colorings of p's k cycles from a palette of size x.

    Deterministic odometer order: cycles in canonical order, the last cycle's
    color varying fastest, letters in palette order.
    """
    k = p.cycle_count()
    for colors in itertools.product(palette.letters, repeat=k):
        yield CycleColoredPermutation(p, colors)


# --- JSON form ---------------------------------------------------------------
#
# {"n": 11, "cycles": [{"elements": [1, 11, 3], "color": "r"}, ...]}
#
# Cycles are emitted in canonical order; input may use any rotation or order
# but must describe a permutation of 1..n.


def to_json_dict(c: CycleColoredPermutation) -> dict:
    return {
        "n": c.n,
        "cycles": [
            {"elements": list(cycle), "color": color}
            for cycle, color in c.colored_cycles()
        ],
    }


def from_json_dict(doc: Mapping) -> CycleColoredPermutation:
    if not isinstance(doc, Mapping):
        raise ValueError("expected a JSON object with 'n' and 'cycles'")
    try:
        n = doc["n"]
        raw_cycles = doc["cycles"]
    except KeyError as exc:
        raise ValueError(f"missing key {exc} in cycle-colored permutation JSON") from None
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"'n' must be an integer, got {n!r}")
    if not isinstance(raw_cycles, Sequence) or isinstance(raw_cycles, (str, bytes)):
        raise ValueError("'cycles' must be an array")
    cycles = []
    mapping: dict[int, str] = {}
    for entry in raw_cycles:
        try:
            elements = entry["elements"]
            color = entry["color"]
        except (TypeError, KeyError):
            raise ValueError(f"cycle entries need 'elements' and 'color': {entry!r}") from None
        if not elements or not all(isinstance(e, int) and not isinstance(e, bool) for e in elements):
            raise ValueError(f"cycle elements must be a nonempty integer array: {elements!r}")
        cycles.append(tuple(elements))
        mapping[min(elements)] = _check_label(color)
    perm = from_cycles(cycles)
    if perm.n != n:
        raise ValueError(f"cycles cover 1..{perm.n} but 'n' is {n}")
    return CycleColoredPermutation.from_mapping(perm, mapping)


def from_json(text: str) -> CycleColoredPermutation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    return from_json_dict(doc)
