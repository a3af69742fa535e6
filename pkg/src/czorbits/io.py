"""Deterministic text formats for matrices, tables, and orbit files.

Matrix text format: the dimension on one line, then dim lines of dim
entries "a,b,c,d/k" separated by single spaces. Table files carry the
header "CLIFFORD-TABLE v1 <name> <count>" followed by one matrix per
record in canonical order. Orbit files are line-oriented: the map file
has "element_id orbit_id" lines, the summary file
"orbit_id layer size representative_encoding" with the encoding in hex.
"""

from __future__ import annotations

from pathlib import Path

from czorbits.errors import InputFormatError
from czorbits.groups import GroupTable
from czorbits.matrices import GateMatrix
from czorbits.orbits import OrbitAtlas
from czorbits.ring import CycloNum

TABLE_MAGIC = "CLIFFORD-TABLE"
TABLE_VERSION = "v1"


def format_matrix(m: GateMatrix) -> str:
    rows = m.entries()
    lines = [str(m.dim)]
    for row in rows:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> GateMatrix:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise InputFormatError("empty matrix text")
    try:
        dim = int(lines[0])
    except ValueError:
        raise InputFormatError(f"bad dimension line {lines[0]!r}") from None
    if dim not in (2, 4):
        raise InputFormatError(f"unsupported dimension {dim}")
    if len(lines) != 1 + dim:
        raise InputFormatError(
            f"expected {dim} rows after the dimension, got {len(lines) - 1}"
        )
    rows = []
    for ln in lines[1:]:
        tokens = ln.split()
        if len(tokens) != dim:
            raise InputFormatError(f"expected {dim} entries per row, got {ln!r}")
        try:
            rows.append([CycloNum.parse(tok) for tok in tokens])
        except ValueError as exc:
            raise InputFormatError(str(exc)) from None
    return GateMatrix.from_entries(rows)


def format_table(table: GroupTable) -> str:
    parts = [f"{TABLE_MAGIC} {TABLE_VERSION} {table.name} {len(table)}\n"]
    parts.extend(format_matrix(m) for m in table.elements)
    return "".join(parts)


def write_table(path: Path, table: GroupTable) -> None:
    path.write_text(format_table(table))


def read_table(path: Path) -> tuple[str, list[GateMatrix]]:
    """Parse a table file into (name, elements); raises on any damage."""
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from None
    lines = text.splitlines()
    if not lines:
        raise InputFormatError(f"{path}: empty table file")
    header = lines[0].split()
    if len(header) != 4 or header[0] != TABLE_MAGIC or header[1] != TABLE_VERSION:
        raise InputFormatError(f"{path}: bad table header {lines[0]!r}")
    name = header[2]
    try:
        count = int(header[3])
    except ValueError:
        raise InputFormatError(f"{path}: bad element count {header[3]!r}") from None

    body = lines[1:]
    elements: list[GateMatrix] = []
    pos = 0
    for _ in range(count):
        if pos >= len(body):
            raise InputFormatError(f"{path}: truncated after {len(elements)} records")
        try:
            dim = int(body[pos])
        except ValueError:
            raise InputFormatError(f"{path}: bad record at line {pos + 2}") from None
        record = body[pos : pos + 1 + dim]
        if len(record) != 1 + dim:
            raise InputFormatError(f"{path}: truncated record at line {pos + 2}")
        try:
            elements.append(parse_matrix("\n".join(record)))
        except InputFormatError as exc:
            raise InputFormatError(f"{path}: {exc}") from None
        pos += 1 + dim
    if any(body[pos:]):
        raise InputFormatError(f"{path}: trailing data after {count} records")
    return name, elements


def format_orbit_map(atlas: OrbitAtlas) -> str:
    return "".join(
        f"{eid} {oid}\n" for eid, oid in enumerate(atlas.orbit_of)
    )


def format_orbit_summary(atlas: OrbitAtlas, c2: GroupTable) -> str:
    lines = []
    for oid in range(1, atlas.n_orbits + 1):
        members = atlas.orbit_members(oid)
        rep = c2.element(atlas.representative(oid)).data.hex()
        lines.append(f"{oid} {atlas.layer(oid)} {len(members)} {rep}\n")
    return "".join(lines)


def format_circuit(circuit, time_order: bool = False) -> str:
    """Circuit text format; time order reverses the product order."""
    from czorbits.synth import CzOp

    lines = [f"CZ-COUNT {circuit.cz_count}"]
    ops = list(circuit.ops)
    if time_order:
        ops.reverse()
    for op in ops:
        if isinstance(op, CzOp):
            lines.append("CZ")
        else:
            a = "".join(op.a)
            b = "".join(op.b)
            lines.append(f"LOCAL a={a} b={b}")
    return "\n".join(lines) + "\n"
