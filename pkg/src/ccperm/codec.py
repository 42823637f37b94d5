"""
The sequence codec for cycle-colored permutations.

A cycle-colored permutation of [n] using letters A corresponds to an
injective sequence a_1 ... a_n over {2..n} union A in which every letter of A
appears.  The sequence is read as a functional graph: vertex i points at a_i,
numbers have out-degree 1, letters are sinks, in-degrees are at most 1, and
nothing points at 1.  Such a graph splits into one directed path feeding each
letter plus disjoint cycles among the numbers.

encode() builds the graph from a colored permutation: within each color class
B (a union of same-colored cycles, listed in increasing order c_1 < ... < c_M)
the restricted permutation's list form b_i = p(c_i) becomes the chain
b_1 -> b_2 -> ... -> b_M -> letter.  The class containing 1 instead keeps its
permutation edges i -> p(i) and redirects the single edge that would enter 1
to the letter.  decode() inverts this by walking each letter's path backwards.

Sequence text format: comma-separated tokens, each a decimal integer or a
color label, e.g. ``11,b,r,2,g,8,5,10,4,6,3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .coloring import LABEL_RE, CycleColoredPermutation, _check_label
from .perm import Permutation

__all__ = [
    "Element",
    "EncodedSequence",
    "CcpGraph",
    "GraphDecomposition",
    "parse_sequence",
    "seq_to_graph",
    "graph_to_seq",
    "decompose",
    "encode",
    "decode",
    "to_dot",
]

# A sequence entry: a number from 2..n or a color label.
Element = int | str


def _check_entries(entries: tuple[Element, ...]) -> None:
    n = len(entries)
    if n == 0:
        raise ValueError("sequence must have at least one entry")
    seen: set[Element] = set()
    for entry in entries:
        if isinstance(entry, bool) or not isinstance(entry, (int, str)):
            raise ValueError(f"entries must be integers or labels, got {entry!r}")
        if entry == 1:
            raise ValueError("token 1 forbidden in sequence")
        if isinstance(entry, int) and not 2 <= entry <= n:
            raise ValueError(f"number {entry} out of range 2..{n}")
        if isinstance(entry, str):
            _check_label(entry)
        if entry in seen:
            raise ValueError(f"repeated entry {entry!r}")
        seen.add(entry)


def _letters_in_order(entries: Sequence[Element]) -> tuple[str, ...]:
    return tuple(e for e in entries if isinstance(e, str))


@dataclass(frozen=True)
class EncodedSequence:
    """An injective sequence over {2..n} union its letters.

    The used-letter set A is exactly the letters appearing; each appears once
    by injectivity.

    >>> s = parse_sequence("11,b,r,2,g,8,5,10,4,6,3")
    >>> s.n, s.letters()
    (11, ('b', 'r', 'g'))
    """

    entries: tuple[Element, ...]

    def __post_init__(self) -> None:
        _check_entries(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    def letters(self) -> tuple[str, ...]:
        """Used letters, in order of first appearance."""
        return _letters_in_order(self.entries)

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.entries)


def parse_sequence(text: str) -> EncodedSequence:
    """Parse the comma-separated sequence text format."""
    tokens = [t.strip() for t in text.strip().split(",")]
    entries: list[Element] = []
    for token in tokens:
        if not token:
            raise ValueError(f"empty token in sequence {text!r}")
        if token.lstrip("-").isdigit():
            entries.append(int(token))
        elif LABEL_RE.match(token):
            entries.append(token)
        else:
            raise ValueError(f"bad token {token!r} in sequence")
    return EncodedSequence(tuple(entries))


@dataclass(frozen=True)
class CcpGraph:
    """Functional-graph view of an encoded sequence.

    ``out[i-1]`` is the unique target of vertex i.  Injectivity of ``out``
    gives every vertex in-degree at most 1; vertex 1 is never a target; each
    used letter is the target of exactly one number and has no out-edges.
    """

    out: tuple[Element, ...]

    def __post_init__(self) -> None:
        _check_entries(self.out)

    @property
    def n(self) -> int:
        return len(self.out)

    def letters(self) -> tuple[str, ...]:
        return _letters_in_order(self.out)

    def target(self, i: int) -> Element:
        return self.out[i - 1]

    def edges(self) -> tuple[tuple[int, Element], ...]:
        return tuple((i, target) for i, target in enumerate(self.out, start=1))

    def in_map(self) -> dict[Element, int]:
        """source keyed by target; well defined since out is injective."""
        return {target: i for i, target in enumerate(self.out, start=1)}


def seq_to_graph(s: EncodedSequence) -> CcpGraph:
    return CcpGraph(s.entries)


def graph_to_seq(g: CcpGraph) -> EncodedSequence:
    return EncodedSequence(g.out)


@dataclass(frozen=True)
class GraphDecomposition:
    """The path-and-cycle structure of a graph.

    ``paths`` pairs each letter with the maximal directed path feeding it,
    listed start first (the start has in-degree 0).  ``cycles`` are the
    remaining vertices, as canonical cycles (min first, sorted by minimum).
    Path and cycle vertices together partition 1..n.
    """

    paths: tuple[tuple[str, tuple[int, ...]], ...]
    cycles: tuple[tuple[int, ...], ...]

    def path_of(self, letter: str) -> tuple[int, ...]:
        for s, path in self.paths:
            if s == letter:
                return path
        raise ValueError(f"no path for letter {letter!r}")

    def to_json_dict(self) -> dict:
        return {
            "paths": {letter: list(path) for letter, path in self.paths},
            "cycles": [list(cycle) for cycle in self.cycles],
        }


def decompose(g: CcpGraph) -> GraphDecomposition:
    """Split a graph into one path per letter plus the leftover cycles.

    Each letter's path is found by walking in-edges backwards from the letter
    to the unique in-degree-0 start.
    """
    in_map = g.in_map()
    on_path: set[int] = set()
    paths = []
    for letter in g.letters():
        reversed_path = []
        v: Element = letter
        while v in in_map:
            v = in_map[v]
            reversed_path.append(v)
        path = tuple(reversed(reversed_path))
        on_path.update(path)
        paths.append((letter, path))
    cycles = []
    seen: set[int] = set(on_path)
    for start in range(1, g.n + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        v = g.target(start)
        while v != start:
            cycle.append(v)
            seen.add(v)
            v = g.target(v)
        cycles.append(tuple(cycle))
    return GraphDecomposition(tuple(paths), tuple(sorted(cycles)))


def encode(c: CycleColoredPermutation) -> EncodedSequence:
    """Encode a cycle-colored permutation as an injective sequence."""
    p = c.perm
    out: list[Element] = [0] * p.n
    into_one = p.preimage(1)
    for color, elems in sorted(c.color_classes().items()):
        if 1 in elems:
            for i in elems:
                out[i - 1] = color if i == into_one else p(i)
        else:
            chain = [p(ci) for ci in sorted(elems)]
            for b, b_next in zip(chain, chain[1:]):
                out[b - 1] = b_next
            out[chain[-1] - 1] = color
    return EncodedSequence(tuple(out))


def decode(s: EncodedSequence) -> CycleColoredPermutation:
    """Invert :func:`encode`; total on valid sequences."""
    g = seq_to_graph(s)
    structure = decompose(g)
    cycle_vertices = {v for cycle in structure.cycles for v in cycle}
    image = [0] * g.n
    class_of: dict[int, str] = {}
    for letter, path in structure.paths:
        members = set(path)
        if 1 in members:
            members |= cycle_vertices
            for i in members:
                target = g.target(i)
                image[i - 1] = target if isinstance(target, int) else 1
        else:
            for ci, bi in zip(sorted(members), path):
                image[ci - 1] = bi
        for i in members:
            class_of[i] = letter
    perm = Permutation(tuple(image))
    colors = tuple(class_of[cycle[0]] for cycle in perm.cycles())
    return CycleColoredPermutation(perm, colors)


# --- DOT export ---------------------------------------------------------------


def to_dot(g: CcpGraph, palette: Sequence[str] | None = None) -> str:
    """Render the graph in Graphviz DOT, byte-stable for a fixed letter order.

    Numbers are boxes, letters ellipses.  Vertices come out ascending
    (numbers first, then letters in palette order), then one edge per vertex
    in source order.  ``palette`` fixes the letter order; it defaults to
    first appearance and must cover every used letter.
    """
    present = g.letters()
    if palette is None:
        letters = present
    else:
        missing = set(present) - set(palette)
        if missing:
            raise ValueError(f"palette is missing used letters {sorted(missing)}")
        letters = tuple(s for s in palette if s in present)
    lines = ["digraph ccp {"]
    for i in range(1, g.n + 1):
        lines.append(f"    {i} [shape=box];")
    for letter in letters:
        lines.append(f"    {letter} [shape=ellipse];")
    for i, target in g.edges():
        lines.append(f"    {i} -> {target};")
    lines.append("}")
    return "\n".join(lines) + "\n"
