"""One-stop construction of the full group/orbit/graph workspace.

Building everything from scratch takes a couple of seconds, so commands
simply rebuild in memory on every invocation; the table files on disk act
as the deterministic persistence layer. When files are present they can
be validated by byte comparison against the regenerated content, which
catches truncation or editing without trusting any cached state.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from czorbits.errors import InputFormatError
from czorbits.graph import CzGraph, build_graph, check_isomorphic
from czorbits.groups import GroupTable, build_c1, build_c2, build_lc2
from czorbits.io import format_table
from czorbits.orbits import OrbitAtlas, assign_layers_and_labels, partition
from czorbits.synth import Synthesizer

TABLE_NAMES = ("c1", "lc2", "c2")


@dataclass
class Workspace:
    c1: GroupTable
    lc2: GroupTable
    c2: GroupTable
    atlas: OrbitAtlas
    graph: CzGraph
    bijection: Optional[dict[int, int]]
    synthesizer: Synthesizer

    def table(self, name: str) -> GroupTable:
        return {"c1": self.c1, "lc2": self.lc2, "c2": self.c2}[name]


_CACHE: Optional[Workspace] = None


def build_workspace(fresh: bool = False) -> Workspace:
    """Build (or fetch the cached) full workspace.

    fresh=True forces a complete rebuild and does not touch the cache;
    determinism checks compare such a rebuild against the cached one.
    """
    global _CACHE
    if _CACHE is not None and not fresh:
        return _CACHE
    c1 = build_c1()
    lc2 = build_lc2(c1)
    c2 = build_c2()
    pre = partition(c2, lc2)
    atlas = assign_layers_and_labels(pre, build_graph(pre, c2))
    graph = build_graph(atlas, c2)
    bijection = check_isomorphic(graph)
    synthesizer = Synthesizer(c1, lc2, c2, atlas, graph)
    ws = Workspace(c1, lc2, c2, atlas, graph, bijection, synthesizer)
    if _CACHE is None:
        _CACHE = ws
    return ws


def atlas_dir(override: Optional[str] = None) -> Path:
    if override:
        return Path(override)
    return Path(os.environ.get("CLIFFORD_ATLAS_DIR") or "atlas")


def write_tables(ws: Workspace, out_dir: Path) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name in TABLE_NAMES:
        path = out_dir / f"{name}.tbl"
        path.write_bytes(format_table(ws.table(name)).encode())
        written.append(path)
    return written


def ensure_tables(
    ws: Workspace,
    out_dir: Path,
    no_regen: bool = False,
    validate: bool = False,
) -> None:
    """Make the table files exist; optionally check them byte-for-byte."""
    for name in TABLE_NAMES:
        path = out_dir / f"{name}.tbl"
        if not path.exists():
            if no_regen:
                raise InputFormatError(
                    f"missing table file {path} and regeneration is disabled"
                )
            out_dir.mkdir(parents=True, exist_ok=True)
            path.write_bytes(format_table(ws.table(name)).encode())
        elif validate:
            expected = format_table(ws.table(name)).encode()
            if path.read_bytes() != expected:
                raise InputFormatError(
                    f"corrupt table file {path}: content does not match "
                    "the regenerated table"
                )
