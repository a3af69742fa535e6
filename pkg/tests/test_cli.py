"""End-to-end command-line behaviour, including exit codes."""

import json
import shutil
import subprocess
import sys

import pytest

from czorbits.cli import main
from czorbits.io import format_matrix
from czorbits.matrices import CNOT_T1, CZ, GateMatrix, I4
from czorbits.ring import OMEGA, ONE, ZERO


@pytest.fixture(scope="module")
def atlas(tmp_path_factory, ws):
    d = tmp_path_factory.mktemp("atlas")
    assert main(["generate", "--out-dir", str(d)]) == 0
    return d


def run_cli(args):
    return subprocess.run(
        [sys.executable, "-m", "czorbits.cli", *args],
        capture_output=True,
        text=True,
    )


class TestGenerate:
    def test_writes_three_tables(self, atlas, capsys):
        for name in ("c1", "lc2", "c2"):
            assert (atlas / f"{name}.tbl").is_file()

    def test_idempotent_bytes(self, atlas):
        before = {p.name: p.read_bytes() for p in atlas.glob("*.tbl")}
        assert main(["generate", "--out-dir", str(atlas)]) == 0
        after = {p.name: p.read_bytes() for p in atlas.glob("*.tbl")}
        assert before == after

    def test_env_var_selects_directory(self, tmp_path, monkeypatch):
        monkeypatch.setenv("CLIFFORD_ATLAS_DIR", str(tmp_path / "via_env"))
        assert main(["generate"]) == 0
        assert (tmp_path / "via_env" / "c1.tbl").is_file()


class TestOrbits:
    def test_stdout_matches_summary_file(self, atlas, capsys):
        assert main(["orbits", "--out-dir", str(atlas)]) == 0
        out = capsys.readouterr().out
        assert out == (atlas / "orbit_summary.txt").read_text()
        assert len(out.strip().splitlines()) == 20
        assert (atlas / "orbit_map.txt").is_file()


class TestGraph:
    def test_dot(self, atlas, capsys):
        assert main(["graph", "--out-dir", str(atlas)]) == 0
        out = capsys.readouterr().out
        assert out.startswith("graph cz_orbits {")
        assert out.rstrip().endswith("}")
        assert sum(" -- " in line for line in out.splitlines()) == 90

    def test_json(self, atlas, capsys):
        assert main(["graph", "--format", "json", "--out-dir", str(atlas)]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["nodes"]) == 20
        assert len(doc["edges"]) == 90
        assert all(e["weight"] == 512 for e in doc["edges"])
        assert all(n["reference_label"].startswith("O") for n in doc["nodes"])


class TestSynth:
    def test_element_with_verify(self, atlas, capsys):
        assert main(
            ["synth", "--element", "0", "--verify", "--out-dir", str(atlas)]
        ) == 0
        assert capsys.readouterr().out.startswith("CZ-COUNT ")

    def test_cz_from_file(self, atlas, tmp_path, capsys):
        path = tmp_path / "cz.txt"
        path.write_text(format_matrix(CZ))
        assert main(["synth", str(path), "--out-dir", str(atlas)]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "CZ-COUNT 1"

    def test_time_order_reverses_lines(self, atlas, tmp_path, capsys):
        path = tmp_path / "cnot.txt"
        path.write_text(format_matrix(CNOT_T1))
        assert main(["synth", str(path), "--out-dir", str(atlas)]) == 0
        product = capsys.readouterr().out.splitlines()
        args = ["synth", str(path), "--time-order", "--out-dir", str(atlas)]
        assert main(args) == 0
        timed = capsys.readouterr().out.splitlines()
        assert product[0] == timed[0] == "CZ-COUNT 1"
        assert timed[1:] == product[1:][::-1]


class TestLookup:
    def test_cnot(self, atlas, tmp_path, capsys):
        path = tmp_path / "cnot.txt"
        path.write_text(format_matrix(CNOT_T1))
        assert main(["lookup", str(path), "--out-dir", str(atlas)]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("element ")
        assert lines[1].startswith("orbit O")
        assert lines[2].startswith("reference-label O")
        assert lines[3] == "layer 1"

    def test_identity_by_element_id(self, atlas, ws, capsys):
        eid = ws.c2.contains(I4)
        args = ["lookup", "--element", str(eid), "--out-dir", str(atlas)]
        assert main(args) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[1] == "orbit O1"
        assert lines[3] == "layer 0"


class TestExitCodes:
    def test_no_subcommand(self):
        with pytest.raises(SystemExit) as err:
            main([])
        assert err.value.code == 2

    def test_file_and_element_together(self, atlas, tmp_path):
        path = tmp_path / "cz.txt"
        path.write_text(format_matrix(CZ))
        args = ["synth", str(path), "--element", "5", "--out-dir", str(atlas)]
        with pytest.raises(SystemExit) as err:
            main(args)
        assert err.value.code == 2

    def test_element_out_of_range(self, atlas):
        with pytest.raises(SystemExit) as err:
            main(["lookup", "--element", "92160", "--out-dir", str(atlas)])
        assert err.value.code == 2

    def test_malformed_matrix(self, atlas, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("2\n1 0\n")
        assert main(["lookup", str(path), "--out-dir", str(atlas)]) == 3
        assert "error:" in capsys.readouterr().err

    def test_missing_file(self, atlas, tmp_path, capsys):
        path = tmp_path / "nope.txt"
        assert main(["lookup", str(path), "--out-dir", str(atlas)]) == 3
        assert "cannot read" in capsys.readouterr().err

    def test_non_unitary(self, atlas, tmp_path, capsys):
        shear = GateMatrix.from_entries([[ONE, ONE], [ZERO, ONE]])
        path = tmp_path / "shear.txt"
        path.write_text(format_matrix(shear))
        assert main(["lookup", str(path), "--out-dir", str(atlas)]) == 4
        assert "not unitary" in capsys.readouterr().err

    def test_unitary_non_member(self, atlas, tmp_path, capsys):
        rows = [[ZERO] * 4 for _ in range(4)]
        for i in range(3):
            rows[i][i] = ONE
        rows[3][3] = OMEGA  # controlled phase pi/4 sits outside the group
        path = tmp_path / "cs.txt"
        path.write_text(format_matrix(GateMatrix.from_entries(rows)))
        assert main(["lookup", str(path), "--out-dir", str(atlas)]) == 4
        assert "not an element" in capsys.readouterr().err

    def test_no_regen_with_missing_tables(self, tmp_path, capsys):
        empty = tmp_path / "empty"
        code = main(["orbits", "--out-dir", str(empty), "--no-regen"])
        assert code == 3
        assert "regeneration is disabled" in capsys.readouterr().err

    def test_verify_rejects_corrupt_table(self, atlas, tmp_path, capsys):
        broken = tmp_path / "broken"
        shutil.copytree(atlas, broken)
        blob = (broken / "c1.tbl").read_bytes()
        (broken / "c1.tbl").write_bytes(blob[:-40] + b"\x00" * 40)
        assert main(["verify", "--out-dir", str(broken)]) == 3
        assert "corrupt" in capsys.readouterr().err


class TestVerifyCommand:
    def test_full_report_passes(self, atlas, capsys):
        assert main(["verify", "--out-dir", str(atlas)]) == 0
        out = capsys.readouterr().out
        lines = out.strip().splitlines()
        assert lines[-1] == "OVERALL PASS"
        assert "CHECK orbit-count expected=20 observed=20 PASS" in lines
        assert all(line.endswith("PASS") for line in lines)


class TestSubprocess:
    """Real process boundary: module entry point, stdin, exit codes."""

    def test_stdin_lookup(self, atlas):
        proc = subprocess.run(
            [sys.executable, "-m", "czorbits.cli", "lookup", "-",
             "--out-dir", str(atlas)],
            input=format_matrix(CNOT_T1),
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "layer 1" in proc.stdout

    def test_usage_error_exit_code(self):
        proc = run_cli([])
        assert proc.returncode == 2
        assert "usage" in proc.stderr.lower()
