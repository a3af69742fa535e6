"""Finite matrix group tables built by breadth-first closure.

A GroupTable holds the elements of a finitely generated matrix group in
canonical encoding order (the element id is the rank in that order), a
hash index from encoding to id, and one generating word per element.
Closure uses right multiplication, so stored words read left-to-right
as matrix products.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional

from czorbits.errors import VerificationError
from czorbits.matrices import C1_GENERATORS, C2_GENERATORS, I2, GateMatrix

CLOSURE_CAP = 10**6

# C1 words use the labels H and P; the two-qubit alphabet suffixes them
# with the wire number.
_WIRE_SUFFIX = {1: "1", 2: "2"}


class GroupTable:
    """Immutable table of group elements with generator words."""

    def __init__(
        self,
        name: str,
        alphabet: Mapping[str, GateMatrix],
        elements: list[GateMatrix],
        words: list[tuple[str, ...]],
        pairs: Optional[list[tuple[int, int]]] = None,
    ) -> None:
        self.name = name
        self.alphabet = dict(alphabet)
        self.elements = elements
        self.words = words
        # pairs: for tables built from tensor products, the (left id,
        # right id) factorization of each element over the source table
        self.pairs = pairs
        self._index = {m.data: i for i, m in enumerate(elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"GroupTable({self.name!r}, size={len(self.elements)})"

    @property
    def dim(self) -> int:
        return self.elements[0].dim

    def element(self, eid: int) -> GateMatrix:
        return self.elements[eid]

    def contains(self, m: GateMatrix) -> Optional[int]:
        """Element id of m, or None when m is not in the group."""
        return self._index.get(m.data)

    def word_of(self, eid: int) -> tuple[str, ...]:
        if not 0 <= eid < len(self.words):
            raise ValueError(f"invalid element id {eid}")
        return self.words[eid]

    def evaluate(self, word: Iterable[str]) -> GateMatrix:
        """Exact left-to-right product of the word's generators."""
        m = GateMatrix.identity(self.dim)
        for label in word:
            gen = self.alphabet.get(label)
            if gen is None:
                raise ValueError(f"unknown generator label {label!r}")
            m = m * gen
        return m


def closure(generators: Mapping[str, GateMatrix], name: str = "group",
            cap: int = CLOSURE_CAP) -> GroupTable:
    """Breadth-first closure of the group generated by `generators`.

    Elements are discovered in word-length order (ties broken by frontier
    position, then generator order), so the first word found for each
    element is a shortest one. Final ids follow canonical encoding order,
    which is independent of discovery order.
    """
    gens = list(generators.items())
    if not gens:
        raise ValueError("closure requires at least one generator")
    dim = gens[0][1].dim
    for label, g in gens:
        if g.dim != dim:
            raise ValueError("generators must share one dimension")
        if not g.is_unitary():
            raise ValueError(f"generator {label!r} is not unitary")

    ident = GateMatrix.identity(dim)
    found: dict[bytes, tuple[str, ...]] = {ident.data: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            word = found[m.data]
            for label, g in gens:
                prod = m * g
                if prod.data not in found:
                    found[prod.data] = word + (label,)
                    nxt.append(prod)
                    if len(found) > cap:
                        raise VerificationError(
                            f"closure of {name} exceeded {cap} elements; "
                            "the representation is not closing"
                        )
        frontier = nxt

    order = sorted(found)
    elements = [GateMatrix(dim, data) for data in order]
    words = [found[data] for data in order]
    return GroupTable(name, dict(gens), elements, words)


def build_c1() -> GroupTable:
    return closure(C1_GENERATORS, "c1")


def build_lc2(c1: GroupTable) -> GroupTable:
    """All tensor products A (x) B over the single-qubit table, deduplicated.

    Distinct (A, B) pairs collide exactly when they differ by opposite
    global phases, so the table is 192*192/8 = 4608 elements. Each element
    keeps the pair with the fewest total generator letters (ties broken by
    id order), so the identity factors as two empty words; the stored word
    is the wire-1 word followed by the wire-2 word, valid because
    A (x) B = (A (x) I)(I (x) B).
    """
    wl = [len(w) for w in c1.words]
    found: dict[bytes, tuple[int, int, int]] = {}
    for ia, a in enumerate(c1.elements):
        for ib, b in enumerate(c1.elements):
            t = a.tensor(b)
            key = (wl[ia] + wl[ib], ia, ib)
            if t.data not in found or key < found[t.data]:
                found[t.data] = key

    alphabet = {k: v for k, v in C2_GENERATORS.items() if k != "CZ"}
    order = sorted(found)
    elements = [GateMatrix(4, data) for data in order]
    pairs = [found[data][1:] for data in order]
    words = [
        tuple(lbl + "1" for lbl in c1.words[ia])
        + tuple(lbl + "2" for lbl in c1.words[ib])
        for ia, ib in pairs
    ]
    return GroupTable("lc2", alphabet, elements, words, pairs=pairs)


def build_c2() -> GroupTable:
    return closure(C2_GENERATORS, "c2")
