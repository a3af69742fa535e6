"""Command-line interface.

Subcommands: generate, orbits, graph, synth, lookup, verify. Exit codes:
0 success, 1 verification failure, 2 usage error, 3 input-format error
(including missing or corrupt table files), 4 matrix not in the group.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from czorbits.errors import (
    CliffordError,
    InputFormatError,
    NotInGroupError,
    VerificationError,
)
from czorbits.graph import to_dot, to_json
from czorbits.io import format_circuit, format_orbit_map, format_orbit_summary, parse_matrix
from czorbits.matrices import GateMatrix
from czorbits.synth import evaluate
from czorbits.verify import run_verification
from czorbits.workspace import Workspace, atlas_dir, build_workspace, ensure_tables, write_tables


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--out-dir",
        metavar="DIR",
        default=None,
        help="table directory (default: $CLIFFORD_ATLAS_DIR or ./atlas)",
    )
    p.add_argument(
        "--no-regen",
        action="store_true",
        help="fail instead of regenerating missing table files",
    )


def _add_matrix_source(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "matrix",
        nargs="?",
        metavar="FILE",
        help="matrix text file, or - for standard input",
    )
    p.add_argument(
        "--element",
        type=int,
        metavar="ID",
        default=None,
        help="pick the group element with this table id instead of a file",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="czorbits",
        description=(
            "Exact two-qubit Clifford group tables, local-Clifford orbits, "
            "CZ connectivity, and CZ-optimal synthesis."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write the three group table files")
    _add_common(p)

    p = sub.add_parser("orbits", help="write and print the orbit partition")
    _add_common(p)

    p = sub.add_parser("graph", help="print the CZ connectivity graph")
    _add_common(p)
    p.add_argument("--format", choices=("dot", "json"), default="dot")

    p = sub.add_parser("synth", help="decompose a group element into gates")
    _add_common(p)
    _add_matrix_source(p)
    p.add_argument(
        "--time-order",
        action="store_true",
        help="print gates in application order instead of product order",
    )
    p.add_argument(
        "--verify",
        action="store_true",
        help="re-evaluate the circuit and require exact equality",
    )

    p = sub.add_parser("lookup", help="membership, orbit, and layer of a matrix")
    _add_common(p)
    _add_matrix_source(p)

    p = sub.add_parser("verify", help="run every structural check and report")
    _add_common(p)

    return parser


def _read_matrix_arg(args, parser: argparse.ArgumentParser, ws: Workspace) -> GateMatrix:
    if (args.matrix is None) == (args.element is None):
        parser.error("provide exactly one of FILE or --element ID")
    if args.element is not None:
        if not 0 <= args.element < len(ws.c2):
            parser.error(f"--element must be in [0, {len(ws.c2) - 1}]")
        return ws.c2.element(args.element)
    if args.matrix == "-":
        text = sys.stdin.read()
    else:
        path = Path(args.matrix)
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputFormatError(f"cannot read {path}: {exc}") from None
    return parse_matrix(text)


def _require_member(ws: Workspace, m: GateMatrix) -> int:
    if not m.is_unitary():
        raise NotInGroupError("matrix is not unitary")
    eid = ws.c2.contains(m)
    if eid is None:
        raise NotInGroupError("matrix is unitary but not an element of the group")
    return eid


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout

    try:
        ws = build_workspace()
        table_dir = atlas_dir(args.out_dir)

        if args.command == "generate":
            for path in write_tables(ws, table_dir):
                out.write(f"wrote {path}\n")
            return 0

        ensure_tables(
            ws,
            table_dir,
            no_regen=args.no_regen,
            validate=(args.command == "verify"),
        )

        if args.command == "orbits":
            table_dir.mkdir(parents=True, exist_ok=True)
            map_path = table_dir / "orbit_map.txt"
            map_path.write_bytes(format_orbit_map(ws.atlas).encode())
            summary = format_orbit_summary(ws.atlas, ws.c2)
            (table_dir / "orbit_summary.txt").write_bytes(summary.encode())
            out.write(summary)
            return 0

        if args.command == "graph":
            if args.format == "dot":
                out.write(to_dot(ws.graph, ws.atlas))
            else:
                out.write(to_json(ws.graph, ws.atlas, ws.bijection))
            return 0

        if args.command == "synth":
            m = _read_matrix_arg(args, parser, ws)
            _require_member(ws, m)
            circuit = ws.synthesizer.synthesize(m)
            if args.verify and evaluate(circuit) != m:
                raise VerificationError("circuit does not reproduce the input")
            out.write(format_circuit(circuit, time_order=args.time_order))
            return 0

        if args.command == "lookup":
            m = _read_matrix_arg(args, parser, ws)
            eid = _require_member(ws, m)
            oid = ws.atlas.orbit_of[eid]
            out.write(f"element {eid}\n")
            out.write(f"orbit O{oid}\n")
            if ws.bijection is not None:
                out.write(f"reference-label O{ws.bijection[oid]}\n")
            out.write(f"layer {ws.atlas.layer(oid)}\n")
            return 0

        if args.command == "verify":
            report = run_verification(ws)
            for line in report.lines():
                out.write(line + "\n")
            return 0 if report.overall else 1

    except CliffordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code

    raise AssertionError("unhandled command")


if __name__ == "__main__":
    sys.exit(main())
