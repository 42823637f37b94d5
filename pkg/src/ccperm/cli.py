"""
Command-line front door.

Subcommands: encode, decode, phi, decompose, dot, table, verify, report.
Machine output goes to stdout, diagnostics to stderr.  Exit codes:

    0  success / identity verified
    1  verification found a counterexample
    2  malformed input
    3  enumeration limit exceeded or integer width overflow
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import coloring
from .codec import decode, decompose, encode, parse_sequence, seq_to_graph, to_dot
from .involution import minimal_relation, phi
from .perm import LimitError
from .stirling import WidthOverflowError, stirling_table
from .verify import IDENTITIES, verify_identity

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_BAD_INPUT = 2
EXIT_LIMIT = 3


def _read_input(args: argparse.Namespace) -> str:
    if args.input is not None and args.file is not None:
        raise ValueError("give the input either inline or with --file, not both")
    if args.file is not None:
        with open(args.file) as handle:
            return handle.read()
    if args.input is None or args.input == "-":
        return sys.stdin.read()
    return args.input


def _palette_arg(args: argparse.Namespace) -> coloring.Palette | None:
    if getattr(args, "palette", None) is None:
        return None
    return coloring.Palette.parse(args.palette)


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, separators=(",", ":")))


def cmd_encode(args: argparse.Namespace) -> int:
    c = coloring.from_json(_read_input(args))
    sequence = encode(c)
    if args.format == "json":
        _emit_json({"n": sequence.n, "sequence": str(sequence)})
    else:
        print(sequence)
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    sequence = parse_sequence(_read_input(args))
    palette = _palette_arg(args)
    if palette is not None:
        stray = set(sequence.letters()) - set(palette.letters)
        if stray:
            raise ValueError(f"letters {sorted(stray)} not in palette {args.palette}")
    c = decode(sequence)
    _emit_json(coloring.to_json_dict(c))
    return EXIT_OK


def cmd_phi(args: argparse.Namespace) -> int:
    c = coloring.from_json(_read_input(args))
    pair = minimal_relation(c)
    if pair is None:
        print("fixed point", file=sys.stderr)
    else:
        print(f"minimal relation: ({pair[0]}, {pair[1]})", file=sys.stderr)
    _emit_json(coloring.to_json_dict(phi(c)))
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    graph = seq_to_graph(parse_sequence(_read_input(args)))
    structure = decompose(graph)
    doc = structure.to_json_dict()
    palette = _palette_arg(args)
    if palette is not None:
        ordered = {s: doc["paths"][s] for s in palette.letters if s in doc["paths"]}
        if len(ordered) != len(doc["paths"]):
            missing = set(doc["paths"]) - set(palette.letters)
            raise ValueError(f"letters {sorted(missing)} not in palette {args.palette}")
        doc["paths"] = ordered
    _emit_json(doc)
    return EXIT_OK


def cmd_dot(args: argparse.Namespace) -> int:
    graph = seq_to_graph(parse_sequence(_read_input(args)))
    palette = _palette_arg(args)
    sys.stdout.write(to_dot(graph, palette.letters if palette else None))
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    table = stirling_table(args.n, max_bits=args.max_bits)
    if args.format == "json":
        _emit_json({
            "n_max": table.n_max,
            "rows": [[str(v) for v in row] for row in table.rows],
        })
    else:
        for row in table.rows:
            print(" ".join(str(v) for v in row))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    palette = _palette_arg(args)
    x = args.x
    if x is None:
        if palette is None:
            raise ValueError("verify needs --x (or --palette for colored identities)")
        x = len(palette)
    report = verify_identity(args.identity, args.n, x, palette=palette,
                             max_n=args.max_n, max_bits=args.max_bits)
    _emit_json(report.to_json_dict())
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


def cmd_report(args: argparse.Namespace) -> int:
    from pathlib import Path

    from .report import render_figures, run_sweeps, write_csv

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    reports = run_sweeps(max_n_perm=args.max_n_perm, max_n_colored=args.max_n_colored)
    csv_path = out_dir / "verification.csv"
    write_csv(reports, csv_path)
    paths = [csv_path] + render_figures(reports, out_dir)
    for path in paths:
        print(path)
    failures = [r for r in reports if not r.passed]
    for r in failures:
        print(f"FAIL {r.identity} n={r.n} x={r.x}: {r.counterexample}", file=sys.stderr)
    return EXIT_COUNTEREXAMPLE if failures else EXIT_OK


def _add_input_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("input", nargs="?", default=None,
                     help="inline input; '-' or omitted reads stdin")
    sub.add_argument("--file", default=None, help="read input from a file instead")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccperm",
        description="Cycle-colored permutations: sequence codec, involution, "
                    "Stirling tables and exhaustive verifiers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="cycle-coloring JSON -> sequence text")
    _add_input_args(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(handler=cmd_encode)

    p = sub.add_parser("decode", help="sequence text -> cycle-coloring JSON")
    _add_input_args(p)
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--palette", help="restrict and order letters, e.g. r,b,g")
    p.set_defaults(handler=cmd_decode)

    p = sub.add_parser("phi", help="apply the sign-reversing involution to coloring JSON")
    _add_input_args(p)
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(handler=cmd_phi)

    p = sub.add_parser("decompose", help="sequence text -> letter paths and cycles JSON")
    _add_input_args(p)
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--palette", help="order the path letters, e.g. r,b,g")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("dot", help="sequence text -> Graphviz DOT")
    _add_input_args(p)
    p.add_argument("--palette", help="order the letter vertices, e.g. r,b,g")
    p.set_defaults(handler=cmd_dot)

    p = sub.add_parser("table", help="print the Stirling triangle")
    p.add_argument("--n", type=int, required=True, help="largest row to print")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--max-bits", type=int, default=None,
                   help="enforce a fixed integer width")
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("verify", help="run one identity check, print a report")
    p.add_argument("--identity", choices=list(IDENTITIES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int, default=None,
                   help="evaluation point / palette size")
    p.add_argument("--palette", help="letters for colored checks, e.g. r,b,g")
    p.add_argument("--max-n", type=int, default=None, help="enumeration guard")
    p.add_argument("--max-bits", type=int, default=None)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("report", help="full sweep: CSV plus figures")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--max-n-perm", type=int, default=8)
    p.add_argument("--max-n-colored", type=int, default=6)
    p.set_defaults(handler=cmd_report)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_BAD_INPUT
    try:
        return args.handler(args)
    except (LimitError, WidthOverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
