import json
import subprocess
import sys
from pathlib import Path

import pytest

from thetarep import __version__, scenario
from thetarep.cli import main

SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"


def _run(args, tmp_path):
    out = tmp_path / "report.json"
    code = main(args + ["--json", str(out)])
    return code, json.loads(out.read_text())


def test_table_command(tmp_path, capsys):
    code, report = _run(["table", "--scenario", str(SCENARIOS / "s3_table.json")], tmp_path)
    assert code == 0
    assert report["version"] == __version__ and report["prime"] == 13
    assert report["orders"] == {"S3": 6}
    assert sorted(report["result"]["table"]["degrees"]) == [1, 1, 2]
    text = capsys.readouterr().out
    assert "degrees" in text


def test_heisenberg_verify_main(tmp_path):
    code, report = _run(["theta", "verify-main", "--scenario",
                         str(SCENARIOS / "heisenberg_q3.json")], tmp_path)
    assert code == 0
    res = report["result"]
    assert res["equivalent"] is True
    assert res["res"]["entries"] == [[0, 1, 3]]
    assert res["ind_class"]["flags"]["graphic1"] and not res["ind_class"]["flags"]["graphic2"]


def test_bad_gamma_exit_2(tmp_path, capsys):
    code, report = _run(["theta", "verify-main", "--scenario",
                         str(SCENARIOS / "bad_gamma.json")], tmp_path)
    assert code == 2
    assert "gamma not a homomorphism" in report["error"]
    assert "gamma not a homomorphism" in capsys.readouterr().err


@pytest.mark.parametrize("name,command", [("s3_a3_clifford.json", ["clifford"]),
                                          ("s3_a3_clifford.json", ["rieffel"]),
                                          ("s3_diagonal_classify.json", ["theta", "classify"]),
                                          ("s3_a3_props.json", ["props", "check"])])
def test_other_commands(name, command, tmp_path):
    code, report = _run(command + ["--scenario", str(SCENARIOS / name)], tmp_path)
    assert code == 0 and report["ok"]


def test_diagonal_classify_content(tmp_path):
    _, report = _run(["theta", "classify", "--scenario",
                      str(SCENARIOS / "s3_diagonal_classify.json")], tmp_path)
    res = report["result"]
    assert res["flags"]["theta"] and res["pairs"] == [[0, 0], [1, 1], [2, 2]]


def test_deterministic_reports(tmp_path):
    args = ["theta", "verify-main", "--scenario", str(SCENARIOS / "heisenberg_q3.json")]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(args + ["--json", str(a)])
    main(args + ["--json", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_schema_errors_name_the_field(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"command": "table", "groups": {"S3": {"builder": "symmetric",
                                                                     "args": "three"}}}))
    code, report = _run(["table", "--scenario", str(bad)], tmp_path)
    assert code == 2 and "groups/S3/args" in report["error"]
    broken = tmp_path / "broken.json"
    broken.write_text('{"command": "table",\n  "groups": }')
    code, report = _run(["table", "--scenario", str(broken)], tmp_path)
    assert code == 2 and report["error"].startswith("line 2")


def test_missing_scenario_and_unknown_group(tmp_path):
    code, report = _run(["table"], tmp_path)
    assert code == 2 and "--scenario" in report["error"]
    code, report = _run(["table", "--scenario", str(tmp_path / "nope.json")], tmp_path)
    assert code == 2
    doc = tmp_path / "g.json"
    doc.write_text(json.dumps({"command": "table", "groups": {"S3": {"builder": "symmetric",
                                                                     "args": [3]}},
                               "group": "S4"}))
    code, report = _run(["table", "--scenario", str(doc)], tmp_path)
    assert code == 2


def test_cap_is_enforced(tmp_path):
    code, report = _run(["table", "--cap", "4", "--scenario", str(SCENARIOS / "s3_table.json")],
                        tmp_path)
    assert code == 2 and "too large" in report["error"]


def test_finding_gives_exit_1(monkeypatch):
    doc = scenario.load((SCENARIOS / "heisenberg_q3.json").read_text())

    def falsified(S, rho, P):
        return {"equivalent": False}
    monkeypatch.setattr(scenario, "verify_main_theorem", falsified)
    report, code = scenario.run(doc)
    assert code == 1 and report["ok"] is False


def test_internal_error_gives_exit_1(monkeypatch):
    doc = scenario.load((SCENARIOS / "s3_a3_clifford.json").read_text())

    def broken(H, pi, P):
        raise scenario.InternalInvariantError("boom")
    monkeypatch.setattr(scenario, "clifford_decompose", broken)
    report, code = scenario.run(doc)
    assert code == 1 and "internal invariant failed" in report["error"]


@pytest.mark.parametrize("args", [["examples", "diagonal"], ["examples", "diagonal", "--param", "G=D8"],
                                  ["examples", "coset", "--param", "G=D8"],
                                  ["examples", "coset", "--param", "G=D8", "--param", "N=1"],
                                  ["examples", "heisenberg", "--param", "q=3"],
                                  ["examples", "wreath", "--param", "m2=3"]])
def test_builtin_examples(args, tmp_path):
    code, report = _run(args, tmp_path)
    assert code == 0 and report["ok"] and "prime" in report


def test_builtin_example_bad_param(tmp_path):
    code, report = _run(["examples", "diagonal", "--param", "G=A9"], tmp_path)
    assert code == 2
    code, report = _run(["examples", "diagonal", "--param", "oops"], tmp_path)
    assert code == 2


def test_suite_command(tmp_path):
    code, report = _run(["suite", "--count", "8", "--seed", "1"], tmp_path)
    assert code == 0
    assert report["result"]["summary"]["equivalent"] == 8


def test_schema_command(capsys):
    assert main(["schema"]) == 0
    schema = json.loads(capsys.readouterr().out)
    assert schema["properties"]["command"]["enum"] == scenario.COMMANDS


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "thetarep", "table", "--scenario",
                           str(SCENARIOS / "s3_table.json"), "--json", "-"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["prime"] == 13
