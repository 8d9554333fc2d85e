import json
import subprocess
import sys

import pytest

from bethe_cherednik.cli import main
from bethe_cherednik.quasiexp import wilson_space
from bethe_cherednik.verify import SUITES, run_suite

PASSING = sorted(set(SUITES) - {"n2-golden"})


@pytest.mark.parametrize("suite", PASSING)
def test_suites_pass_at_n2(suite):
    report = run_suite(suite, 2)
    assert report["passed"], report
    assert report["first_failure"] is None
    assert set(report) == {"suite", "n", "trials", "passed", "first_failure"}


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_every_suite_catches_its_fault(suite):
    report = run_suite(suite, 2, fault=True)
    assert not report["passed"]
    assert "identity" in report["first_failure"] or "relation" in report["first_failure"]


def test_bethe_comm_fault_at_n4():
    assert not run_suite("bethe-comm", 4, trials=2, fault=True)["passed"]


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_central_n2(capsys, tmp_path):
    out = tmp_path / "c2.json"
    assert main(["central", "--n", "2", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    const = doc["c"][2][2]["terms"]
    rendered = sorted((t["n"], tuple(t["x"]), tuple(t["perm"]), tuple(t["y"])) for t in const)
    assert rendered == sorted(
        [
            ("1", (0, 0), (1, 2), (0, 0)),
            ("1", (1, 1), (1, 2), (1, 1)),
            ("-1", (1, 0), (1, 2), (1, 0)),
            ("-1", (0, 1), (1, 2), (0, 1)),
            ("-1", (0, 0), (2, 1), (0, 0)),
        ]
    )


def test_central_n1_is_trivial(capsys):
    assert main(["central", "--n", "1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["N"] == 1 and len(doc["c"]) == 2
    assert doc["c"][0][0]["terms"][0]["n"] == "1"


def test_exit_codes(capsys, monkeypatch):
    assert main(["central", "--n", "9"]) == 3
    assert main(["central"]) == 2
    assert main(["verify", "--suite", "bogus"]) == 2
    assert main(["verify", "--suite", "zb", "--n", "0"]) == 2
    monkeypatch.setenv("WORKBENCH_MAX_N", "1")
    assert main(["verify", "--suite", "zb", "--n", "2"]) == 3


def test_verify_report_is_one_json_line(capsys):
    assert main(["verify", "--suite", "zb", "--n", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1
    assert json.loads(lines[0])["passed"] is True
    assert main(["verify", "--suite", "multisym", "--n", "2", "--inject-fault"]) == 1


def test_psi_n1_origin(tmp_path, capsys):
    point = tmp_path / "p.json"
    point.write_text(json.dumps({"N": 1, "Z": [["0"]], "L": [["0"]]}))
    assert main(["psi", "--point", str(point), "--order", "4"]) == 0
    c = json.loads(capsys.readouterr().out)["c"]
    assert c[0][0] == "1/1" and c[1][1] == "-1/1"
    nonzero = [(i, j) for i in range(1, 5) for j in range(1, 5) if c[i][j] != "0/1"]
    assert nonzero == [(1, 1)]


def test_psi_round_trip_and_prefix(tmp_path):
    space = tmp_path / "w.json"
    space.write_text(json.dumps(wilson_space([0, 2], [1, -1]).to_json()))
    a, b, c = tmp_path / "a.json", tmp_path / "b.json", tmp_path / "c.json"
    assert main(["psi", "--qexp", str(space), "--order", "8", "--out", str(a)]) == 0
    assert main(["psi", "--qexp", str(space), "--order", "8", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert main(["psi", "--qexp", str(space), "--order", "4", "--out", str(c)]) == 0
    big, small = json.loads(a.read_text())["c"], json.loads(c.read_text())["c"]
    assert small == [row[:5] for row in big[:5]]


def test_psi_bad_input(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["psi", "--qexp", str(bad)]) == 2
    bad.write_text(json.dumps({"N": 2, "Z": [["1", "0"], ["0", "1"]], "L": [["1", "0"], ["0", "1"]]}))
    assert main(["psi", "--point", str(bad)]) == 2
    assert main(["psi", "--point", str(bad), "--qexp", str(bad)]) == 2
    assert main(["psi"]) == 2


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "bethe_cherednik", "verify", "--suite", "dunkl", "--n", "2", "--seed", "3"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and b'"passed":true' in first


def test_n2_golden_cli_exit_code(capsys):
    # expected 0; fails because five of the N=2 displays disagree with the exact computation
    code = main(["verify", "--suite", "n2-golden"])
    report = json.loads(capsys.readouterr().out)
    assert code == 0, report["first_failure"]["failed_fixtures"]


def test_wilson_cli_n3(capsys):
    assert main(["verify", "--suite", "wilson", "--n", "3", "--trials", "10"]) == 0
