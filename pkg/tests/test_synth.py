"""Synthesis: minimal CZ counts, exact reconstruction, circuit structure."""

import random

import pytest

from czorbits.errors import NotInGroupError
from czorbits.matrices import CNOT_T1, CNOT_T2, CZ, H, I2, I4, P, SWAP
from czorbits.synth import CZ_OP, Circuit, CzOp, LocalOp, evaluate, make_circuit


def bfs_distance_from_identity_orbit(graph, oid):
    """Independent BFS over the edge list, not using stored layers."""
    dist = {1: 0}
    frontier = [1]
    while frontier:
        nxt = []
        for node in frontier:
            for other in graph.neighbors(node):
                if other not in dist:
                    dist[other] = dist[node] + 1
                    nxt.append(other)
        frontier = nxt
    return dist[oid]


class TestLandmarks:
    def test_identity_synthesizes_empty(self, ws):
        circuit = ws.synthesizer.synthesize(I4)
        assert circuit.ops == ()
        assert circuit.cz_count == 0
        assert evaluate(circuit) == I4

    def test_local_gate_synthesizes_without_cz(self, ws):
        m = H.tensor(P)
        circuit = ws.synthesizer.synthesize(m)
        assert circuit.cz_count == 0
        assert evaluate(circuit) == m

    def test_cz_needs_one(self, ws):
        circuit = ws.synthesizer.synthesize(CZ)
        assert circuit.cz_count == 1
        assert evaluate(circuit) == CZ

    def test_cnots_need_one(self, ws):
        for cnot in (CNOT_T1, CNOT_T2):
            circuit = ws.synthesizer.synthesize(cnot)
            assert circuit.cz_count == 1
            assert evaluate(circuit) == cnot

    def test_swap_needs_three(self, ws):
        circuit = ws.synthesizer.synthesize(SWAP)
        assert circuit.cz_count == 3
        assert evaluate(circuit) == SWAP
        # graph-distance oracle computed here from scratch
        oid = ws.atlas.orbit_of[ws.c2.contains(SWAP)]
        assert bfs_distance_from_identity_orbit(ws.graph, oid) == 3


class TestRoundTrip:
    def test_sample_round_trip_with_minimal_count(self, ws):
        rng = random.Random(83)
        for eid in rng.sample(range(len(ws.c2)), 400):
            circuit = ws.synthesizer.synthesize_id(eid)
            layer = ws.atlas.layer(ws.atlas.orbit_of[eid])
            assert circuit.cz_count == layer
            assert circuit.cz_count <= 3
            assert evaluate(circuit) == ws.c2.element(eid)

    def test_cz_count_matches_independent_bfs(self, ws):
        rng = random.Random(89)
        for eid in rng.sample(range(len(ws.c2)), 50):
            circuit = ws.synthesizer.synthesize_id(eid)
            oid = ws.atlas.orbit_of[eid]
            assert circuit.cz_count == bfs_distance_from_identity_orbit(
                ws.graph, oid
            )

    def test_scan_descent_agrees_with_plans(self, ws):
        rng = random.Random(97)
        for eid in rng.sample(range(len(ws.c2)), 10):
            m = ws.c2.element(eid)
            fast = ws.synthesizer.synthesize(m)
            slow = ws.synthesizer._synthesize_by_scan(m)
            assert fast.cz_count == slow.cz_count
            assert evaluate(fast) == m
            assert evaluate(slow) == m

    def test_non_member_rejected(self, ws):
        with pytest.raises(NotInGroupError):
            ws.synthesizer.synthesize(I4.scale(I4.entry(0, 0) + I4.entry(0, 0)))


class TestCircuitStructure:
    def test_alternation(self, ws):
        rng = random.Random(101)
        for eid in rng.sample(range(len(ws.c2)), 300):
            ops = ws.synthesizer.synthesize_id(eid).ops
            for left, right in zip(ops, ops[1:]):
                assert not (
                    isinstance(left, LocalOp) and isinstance(right, LocalOp)
                )

    def test_histogram(self, ws):
        assert ws.synthesizer.cz_cost_histogram() == {
            0: 4608,
            1: 41472,
            2: 41472,
            3: 4608,
        }

    def test_make_circuit_merges_locals(self):
        merged = make_circuit(
            [LocalOp(("H",), ()), LocalOp(("P",), ("H",)), CZ_OP]
        )
        assert merged.ops == (LocalOp(("H", "P"), ("H",)), CZ_OP)

    def test_make_circuit_drops_empty_local(self):
        assert make_circuit([LocalOp((), ()), CZ_OP]).ops == (CZ_OP,)

    def test_cz_count_property(self):
        circuit = Circuit((CZ_OP, LocalOp(("H",), ()), CZ_OP))
        assert circuit.cz_count == 2

    def test_cz_op_identity(self):
        assert CZ_OP == CzOp()
        assert CZ_OP != LocalOp((), ())


class TestEvaluate:
    def test_double_cz_is_identity(self):
        assert evaluate(Circuit((CZ_OP, CZ_OP))) == I4

    def test_hadamard_conjugation_gives_cnot(self):
        circuit = Circuit(
            (LocalOp(("H",), ()), CZ_OP, LocalOp(("H",), ()))
        )
        assert evaluate(circuit) == CNOT_T1
        circuit = Circuit(
            (LocalOp((), ("H",)), CZ_OP, LocalOp((), ("H",)))
        )
        assert evaluate(circuit) == CNOT_T2

    def test_local_words_multiply_left_to_right(self):
        circuit = Circuit((LocalOp(("H", "P"), ()),))
        assert evaluate(circuit) == (H * P).tensor(I2)

    def test_bad_word_rejected(self):
        with pytest.raises(ValueError):
            evaluate(Circuit((LocalOp(("Q",), ()),)))
