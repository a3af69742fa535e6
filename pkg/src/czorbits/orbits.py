"""Left-coset partition of the two-qubit group under local Cliffords.

Two elements are equivalent when they differ by left multiplication with
an element of LC2; the classes are the left cosets LC2*U. The atlas maps
every element id to its orbit id, keeps sorted member lists, and (after
labeling) each orbit's CZ layer. Orbit ids are 1-based.
"""

from __future__ import annotations

from typing import Optional

from czorbits.errors import NotInGroupError, VerificationError
from czorbits.groups import GroupTable
from czorbits.matrices import GateMatrix


class OrbitAtlas:
    """Immutable orbit partition with optional layer assignment."""

    def __init__(
        self,
        orbit_of: list[int],
        members: list[tuple[int, ...]],
        ident_eid: int,
        layers: Optional[list[int]] = None,
    ) -> None:
        self.orbit_of = orbit_of
        self.members = members
        # element id of the identity matrix in the underlying table; BFS
        # layering is anchored at its orbit
        self.ident_eid = ident_eid
        self.layers = layers

    @property
    def n_orbits(self) -> int:
        return len(self.members)

    def orbit_members(self, oid: int) -> tuple[int, ...]:
        return self.members[oid - 1]

    def representative(self, oid: int) -> int:
        """Element id of the orbit's canonical (minimal) member.

        Element ids rank the canonical encodings, so the minimal id is the
        lexicographically minimal encoding.
        """
        return self.members[oid - 1][0]

    def layer(self, oid: int) -> int:
        if self.layers is None:
            raise ValueError("layers not assigned yet")
        return self.layers[oid - 1]


def partition(c2: GroupTable, lc2: GroupTable) -> OrbitAtlas:
    """Split c2 into left cosets of lc2, labeled in discovery order."""
    ident_eid = c2.contains(GateMatrix.identity(c2.dim))
    if ident_eid is None:
        raise VerificationError("group table lacks the identity")

    orbit_of = [0] * len(c2)
    members: list[tuple[int, ...]] = []
    for eid in range(len(c2)):
        if orbit_of[eid]:
            continue
        u = c2.element(eid)
        oid = len(members) + 1
        found = []
        for v in lc2.elements:
            mid = c2.contains(v * u)
            if mid is None:
                raise VerificationError(
                    "coset product left the group; tables are inconsistent"
                )
            if orbit_of[mid] == 0:
                orbit_of[mid] = oid
                found.append(mid)
            elif orbit_of[mid] != oid:
                raise VerificationError(
                    "cosets overlap; the equivalence relation is broken"
                )
        members.append(tuple(sorted(found)))
    sizes = {len(m) for m in members}
    if len(members) != len(c2) // len(lc2) or sizes != {len(lc2)}:
        raise VerificationError(
            f"expected {len(c2) // len(lc2)} cosets of size {len(lc2)}, "
            f"got {len(members)} with sizes {sorted(sizes)}"
        )
    return OrbitAtlas(orbit_of, members, ident_eid)


def assign_layers_and_labels(atlas: OrbitAtlas, graph) -> OrbitAtlas:
    """Relabel orbits deterministically and attach CZ layers.

    Layers come from BFS over the quotient graph starting at the orbit of
    the identity (layer 0). Final ids sort by (layer, representative), so
    labeling is reproducible; in particular the identity orbit becomes
    orbit 1 and the unique deepest orbit takes the last id.
    """
    n = atlas.n_orbits
    start = atlas.orbit_of[atlas.ident_eid]

    layer_of = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for oid in frontier:
            for other in range(1, n + 1):
                if graph.weight[oid - 1][other - 1] and other not in layer_of:
                    layer_of[other] = layer_of[oid] + 1
                    nxt.append(other)
        frontier = nxt
    if len(layer_of) != n:
        raise VerificationError("quotient graph is disconnected")

    old_order = sorted(
        range(1, n + 1), key=lambda o: (layer_of[o], atlas.representative(o))
    )
    new_of_old = {old: new + 1 for new, old in enumerate(old_order)}
    orbit_of = [new_of_old[o] for o in atlas.orbit_of]
    members = [atlas.members[old - 1] for old in old_order]
    layers = [layer_of[old] for old in old_order]
    return OrbitAtlas(orbit_of, members, atlas.ident_eid, layers)


def orbit_of_matrix(atlas: OrbitAtlas, c2: GroupTable, m: GateMatrix) -> int:
    eid = c2.contains(m)
    if eid is None:
        raise NotInGroupError("matrix is not an element of the group")
    return atlas.orbit_of[eid]
