"""
The sign-reversing involution on cycle-colored permutations.

A relation of (p, colors) is a pair i < j whose containing cycles share a
color.  phi acts by the lexicographically minimal relation (i, j): it
left-multiplies by the transposition (i j), which splits the cycle containing
i and j or merges their two cycles, and transports every element's cycle
color.  Split and merge both stay inside one color class, so the relation set
is unchanged and applying phi twice gives back the original.  The fixed
points are exactly the identity permutation with all n cycles colored
distinctly, which makes phi a parity-flipping pairing of everything else.
"""

from __future__ import annotations

from .coloring import CycleColoredPermutation
from .perm import Permutation, apply_transposition

__all__ = ["relations", "minimal_relation", "sign", "phi"]


def relations(c: CycleColoredPermutation) -> tuple[tuple[int, int], ...]:
    """All pairs i < j whose cycles share a color, in lexicographic order."""
    pairs = []
    for elems in c.color_classes().values():
        ordered = sorted(elems)
        for a in range(len(ordered)):
            for b in range(a + 1, len(ordered)):
                pairs.append((ordered[a], ordered[b]))
    return tuple(sorted(pairs))


def minimal_relation(c: CycleColoredPermutation) -> tuple[int, int] | None:
    """The lexicographically least relation, or None when there is none."""
    best: tuple[int, int] | None = None
    for elems in c.color_classes().values():
        ordered = sorted(elems)
        if len(ordered) < 2:
            continue
        candidate = (ordered[0], ordered[1])
        if best is None or candidate < best:
            best = candidate
    return best


def sign(p: Permutation) -> int:
    """(-1)**(n - cycle count)."""
    return -1 if (p.n - p.cycle_count()) % 2 else 1


def phi(c: CycleColoredPermutation) -> CycleColoredPermutation:
    """Apply the involution; fixed points are returned unchanged."""
    pair = minimal_relation(c)
    if pair is None:
        return c
    i, j = pair
    moved = apply_transposition(i, j, c.perm)
    color_of = {e: color for cycle, color in c.colored_cycles() for e in cycle}
    return CycleColoredPermutation(moved, tuple(color_of[cycle[0]] for cycle in moved.cycles()))
