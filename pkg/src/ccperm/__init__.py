"""Cycle-colored permutations: codec, involution, Stirling tables, verifiers."""

from .codec import (
    CcpGraph,
    EncodedSequence,
    GraphDecomposition,
    decode,
    decompose,
    encode,
    graph_to_seq,
    parse_sequence,
    seq_to_graph,
    to_dot,
)
from .coloring import CycleColoredPermutation, Palette, enumerate_colorings
from .involution import minimal_relation, phi, relations, sign
from .perm import (
    LimitError,
    Permutation,
    apply_transposition,
    cycle_decomposition,
    enumerate_permutations,
    from_cycles,
    parse_cycles,
    parse_one_line,
)
from .stirling import (
    StirlingTable,
    WidthOverflowError,
    falling_factorial,
    rising_factorial,
    stirling_table,
)
from .verify import (
    VerificationReport,
    default_palette,
    enumerate_sequences,
    verify_bijection,
    verify_identity,
    verify_involution,
    verify_signed,
    verify_unsigned,
)

__all__ = [
    "CcpGraph",
    "CycleColoredPermutation",
    "EncodedSequence",
    "GraphDecomposition",
    "LimitError",
    "Palette",
    "Permutation",
    "StirlingTable",
    "VerificationReport",
    "WidthOverflowError",
    "apply_transposition",
    "cycle_decomposition",
    "decode",
    "decompose",
    "default_palette",
    "encode",
    "enumerate_colorings",
    "enumerate_permutations",
    "enumerate_sequences",
    "falling_factorial",
    "from_cycles",
    "graph_to_seq",
    "minimal_relation",
    "parse_cycles",
    "parse_one_line",
    "parse_sequence",
    "phi",
    "relations",
    "rising_factorial",
    "seq_to_graph",
    "sign",
    "stirling_table",
    "to_dot",
    "verify_bijection",
    "verify_identity",
    "verify_involution",
    "verify_signed",
    "verify_unsigned",
]

__version__ = "0.1.0"
