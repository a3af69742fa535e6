"""Text formats: matrices, tables, orbit files, circuits."""

import random

import pytest

from czorbits.errors import InputFormatError
from czorbits.io import (
    TABLE_MAGIC,
    format_circuit,
    format_matrix,
    format_orbit_map,
    format_orbit_summary,
    format_table,
    parse_matrix,
    read_table,
    write_table,
)
from czorbits.matrices import CZ, H, I4
from czorbits.synth import CZ_OP, Circuit, LocalOp


class TestMatrixFormat:
    @pytest.mark.parametrize("mat", [H, CZ, I4], ids=["H", "CZ", "I4"])
    def test_round_trip(self, mat):
        assert parse_matrix(format_matrix(mat)) == mat

    def test_round_trip_random_elements(self, ws):
        rng = random.Random(17)
        for eid in rng.sample(range(len(ws.c2)), 25):
            m = ws.c2.element(eid)
            assert parse_matrix(format_matrix(m)) == m

    def test_layout(self):
        text = format_matrix(H)
        lines = text.strip().splitlines()
        assert lines[0] == "2"
        assert len(lines) == 3
        assert all(len(line.split()) == 2 for line in lines[1:])

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "x\n1 0\n0 1\n",
            "3\n1 0 0\n0 1 0\n0 0 1\n",
            "2\n1 0\n",
            "2\n1 0 0\n0 1\n",
            "2\n1 bogus\n0 1\n",
            "2\n1 0\n0 1\n1 0\n",
        ],
        ids=[
            "empty",
            "bad-dim",
            "unsupported-dim",
            "missing-row",
            "ragged-row",
            "bad-entry",
            "extra-row",
        ],
    )
    def test_malformed_rejected(self, text):
        with pytest.raises(InputFormatError):
            parse_matrix(text)


class TestTableFormat:
    def test_round_trip(self, ws, tmp_path):
        path = tmp_path / "c1.tbl"
        write_table(path, ws.c1)
        name, elements = read_table(path)
        assert name == "c1"
        assert elements == list(ws.c1.elements)

    def test_header_contents(self, ws):
        blob = format_table(ws.c1)
        header = blob[: blob.index("\n")]
        assert header == f"{TABLE_MAGIC} v1 c1 192"

    def test_byte_determinism(self, ws):
        one = format_table(ws.lc2)
        two = format_table(ws.lc2)
        assert one == two

    def test_truncated_rejected(self, ws, tmp_path):
        path = tmp_path / "c1.tbl"
        write_table(path, ws.c1)
        blob = path.read_bytes()
        path.write_bytes(blob[: len(blob) // 2])
        with pytest.raises(InputFormatError):
            read_table(path)

    def test_trailing_data_rejected(self, ws, tmp_path):
        path = tmp_path / "c1.tbl"
        write_table(path, ws.c1)
        path.write_bytes(path.read_bytes() + b"junk\n")
        with pytest.raises(InputFormatError):
            read_table(path)

    def test_bad_header_rejected(self, tmp_path):
        path = tmp_path / "c1.tbl"
        path.write_bytes(b"NOT-A-TABLE v1 c1 0\n")
        with pytest.raises(InputFormatError):
            read_table(path)


class TestOrbitFiles:
    def test_map_covers_every_element(self, ws):
        lines = format_orbit_map(ws.atlas).strip().splitlines()
        assert len(lines) == 92160
        eids = [int(line.split()[0]) for line in lines]
        assert eids == list(range(92160))
        oids = {int(line.split()[1]) for line in lines}
        assert oids == set(range(1, 21))

    def test_summary_shape(self, ws):
        lines = format_orbit_summary(ws.atlas, ws.c2).strip().splitlines()
        assert len(lines) == 20
        first = lines[0].split()
        assert first[0] == "1"
        assert first[1] == "0"
        assert first[2] == "4608"
        layers = [int(line.split()[1]) for line in lines]
        assert sorted(layers) == [0] + [1] * 9 + [2] * 9 + [3]


class TestCircuitFormat:
    def test_known_output(self):
        circuit = Circuit(
            (LocalOp(("H", "P"), ()), CZ_OP, LocalOp((), ("H",)))
        )
        text = format_circuit(circuit)
        assert text.splitlines() == [
            "CZ-COUNT 1",
            "LOCAL a=HP b=",
            "CZ",
            "LOCAL a= b=H",
        ]

    def test_time_order_reverses_ops_only(self):
        circuit = Circuit(
            (LocalOp(("H", "P"), ()), CZ_OP, LocalOp((), ("H",)))
        )
        text = format_circuit(circuit, time_order=True)
        assert text.splitlines() == [
            "CZ-COUNT 1",
            "LOCAL a= b=H",
            "CZ",
            "LOCAL a=HP b=",
        ]

    def test_empty_circuit(self):
        assert format_circuit(Circuit(())).splitlines() == ["CZ-COUNT 0"]
