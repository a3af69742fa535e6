"""CZ-connectivity graph on the 20 orbits.

The weight between orbits i and j is |CZ*O_i intersect O_j|, computed by
pushing every group element through CZ and reading orbit ids. The result
is a 9-regular graph whose every edge carries weight 512; it must match
the embedded reference diagram up to isomorphism.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional, Union

from czorbits.errors import VerificationError
from czorbits.groups import GroupTable
from czorbits.matrices import CZ, GateMatrix
from czorbits.orbits import OrbitAtlas

# Reference 20-node diagram, one entry per unordered edge (90 total,
# every node degree 9). Node 1 is the identity orbit, node 20 the
# deepest one.
REFERENCE_EDGES: frozenset[tuple[int, int]] = frozenset(
    (min(a, b), max(a, b))
    for a, rest in [
        (1, (2, 3, 4, 5, 6, 7, 8, 9, 10)),
        (2, (7, 8, 9, 10, 11, 12, 13, 14)),
        (3, (4, 5, 7, 9, 14, 15, 16, 17)),
        (4, (6, 7, 10, 13, 15, 16, 18)),
        (5, (6, 8, 9, 12, 15, 17, 19)),
        (6, (8, 10, 11, 15, 18, 19)),
        (7, (8, 13, 14, 17, 18)),
        (8, (11, 12, 17, 18)),
        (9, (10, 12, 14, 16, 19)),
        (10, (11, 13, 16, 19)),
        (11, (12, 13, 18, 19)),
        (12, (14, 17, 19)),
        (13, (14, 16, 18)),
        (14, (16, 17)),
        (15, (16, 17, 18, 19)),
        (16, (19,)),
        (17, (18,)),
        (20, (11, 12, 13, 14, 15, 16, 17, 18, 19)),
    ]
    for b in rest
)


class CzGraph:
    """Symmetric weighted graph on 1-based orbit ids."""

    def __init__(
        self,
        weight: list[list[int]],
        witnesses: Optional[dict[tuple[int, int], int]] = None,
    ) -> None:
        self.n = len(weight)
        self.weight = weight
        # witnesses[(i, j)]: minimal element id u in O_i with CZ*u in O_j
        self.witnesses = witnesses

    def edges(self) -> list[tuple[int, int, int]]:
        return [
            (i + 1, j + 1, self.weight[i][j])
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.weight[i][j]
        ]

    def neighbors(self, oid: int) -> list[int]:
        row = self.weight[oid - 1]
        return [j + 1 for j in range(self.n) if row[j]]

    def degree(self, oid: int) -> int:
        return len(self.neighbors(oid))

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((a, b) for a, b, _ in self.edges())


def build_graph(
    atlas: OrbitAtlas,
    c2: GroupTable,
    gate: GateMatrix = CZ,
    check: bool = True,
) -> CzGraph:
    """Weight matrix of the pushforward through `gate`.

    weight[i][j] counts elements of O_{i+1} landing in O_{j+1}. With
    check=True the structural law (symmetry, weights in {0, 512}, zero
    diagonal) is enforced; disable it only for degenerate probes.
    """
    n = atlas.n_orbits
    weight = [[0] * n for _ in range(n)]
    witnesses: dict[tuple[int, int], int] = {}
    for eid in range(len(c2)):
        i = atlas.orbit_of[eid]
        mid = c2.contains(gate * c2.element(eid))
        if mid is None:
            raise VerificationError("pushforward left the group")
        j = atlas.orbit_of[mid]
        weight[i - 1][j - 1] += 1
        witnesses.setdefault((i, j), eid)

    if check:
        block = 512
        for i in range(n):
            if weight[i][i] != 0:
                raise VerificationError(f"orbit {i + 1} connects to itself")
            for j in range(n):
                if weight[i][j] != weight[j][i]:
                    raise VerificationError("weight matrix is asymmetric")
                if weight[i][j] not in (0, block):
                    raise VerificationError(
                        f"weight[{i + 1}][{j + 1}] = {weight[i][j]}, "
                        f"expected 0 or {block}"
                    )
    return CzGraph(weight, witnesses)


def _edge_set(g: Union[CzGraph, Iterable[tuple[int, int]]]) -> frozenset:
    if isinstance(g, CzGraph):
        return g.edge_set()
    return frozenset((min(a, b), max(a, b)) for a, b in g)


def check_isomorphic(
    g: Union[CzGraph, Iterable[tuple[int, int]]],
    ref: Union[CzGraph, Iterable[tuple[int, int]]] = REFERENCE_EDGES,
    anchors: Optional[Mapping[int, int]] = None,
    n: int = 20,
) -> Optional[dict[int, int]]:
    """Edge-preserving node bijection g -> ref, or None.

    `anchors` pins chosen nodes of g to nodes of ref before the search;
    the default pins 1 to 1 and n to n (identity orbit and deepest orbit
    both carry forced labels). Backtracking with adjacency consistency is
    instant at this size. Candidate nodes are tried in ascending order, so
    mapping a graph onto itself yields the identity bijection.
    """
    a_edges = _edge_set(g)
    b_edges = _edge_set(ref)
    if anchors is None:
        anchors = {1: 1, n: n}

    a_adj = {v: set() for v in range(1, n + 1)}
    b_adj = {v: set() for v in range(1, n + 1)}
    for x, y in a_edges:
        a_adj[x].add(y)
        a_adj[y].add(x)
    for x, y in b_edges:
        b_adj[x].add(y)
        b_adj[y].add(x)

    if sorted(len(a_adj[v]) for v in a_adj) != sorted(len(b_adj[v]) for v in b_adj):
        return None

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(u: int, v: int) -> bool:
        if len(a_adj[u]) != len(b_adj[v]):
            return False
        for w, mw in mapping.items():
            if (w in a_adj[u]) != (mw in b_adj[v]):
                return False
        return True

    for u, v in anchors.items():
        if not consistent(u, v):
            return None
        mapping[u] = v
        used.add(v)

    free = [u for u in range(1, n + 1) if u not in mapping]

    def extend() -> bool:
        if not free:
            return True
        # most-constrained first: prefer nodes touching the mapped region
        free.sort(key=lambda u: (-sum(w in mapping for w in a_adj[u]), u))
        u = free.pop(0)
        for v in range(1, n + 1):
            if v in used or not consistent(u, v):
                continue
            mapping[u] = v
            used.add(v)
            if extend():
                return True
            del mapping[u]
            used.remove(v)
        free.insert(0, u)
        return False

    return dict(sorted(mapping.items())) if extend() else None


def cnot_graph_equivalence(
    atlas: OrbitAtlas,
    c2: GroupTable,
    graph: Optional[CzGraph] = None,
) -> bool:
    """True iff both CNOT pushforward graphs equal the CZ graph exactly."""
    from czorbits.matrices import CNOT_T1, CNOT_T2

    if graph is None:
        graph = build_graph(atlas, c2)
    for gate in (CNOT_T2, CNOT_T1):
        other = build_graph(atlas, c2, gate=gate)
        if other.weight != graph.weight:
            return False
    return True


def to_dot(graph: CzGraph, atlas: OrbitAtlas) -> str:
    lines = ["graph cz_orbits {"]
    for lv in sorted(set(atlas.layers or [])):
        nodes = [f"O{o}" for o in range(1, graph.n + 1) if atlas.layer(o) == lv]
        lines.append(f"  {{ rank=same; {'; '.join(nodes)}; }}")
    for oid in range(1, graph.n + 1):
        size = len(atlas.orbit_members(oid))
        lines.append(f'  O{oid} [label="O{oid}" layer={atlas.layer(oid)} size={size}];')
    for a, b, w in graph.edges():
        lines.append(f"  O{a} -- O{b} [weight={w}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(
    graph: CzGraph,
    atlas: OrbitAtlas,
    bijection: Optional[Mapping[int, int]] = None,
) -> str:
    import json

    nodes = []
    for oid in range(1, graph.n + 1):
        node = {
            "id": oid,
            "layer": atlas.layer(oid),
            "size": len(atlas.orbit_members(oid)),
        }
        if bijection is not None:
            node["reference_label"] = f"O{bijection[oid]}"
        nodes.append(node)
    edges = [{"a": a, "b": b, "weight": w} for a, b, w in graph.edges()]
    return json.dumps({"nodes": nodes, "edges": edges}, indent=2) + "\n"
