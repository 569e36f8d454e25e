"""Command-line interface: output shapes, determinism, exit codes."""

import json

import pytest

from qwig import parse_qfraction
from qwig.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_roots_example(capsys):
    code, obj = run_json(capsys, "roots", "--weight", "1,0|0",
                         "--variant", "adjoint")
    assert code == 0
    assert obj["classical"] == [1, -1, -2]
    assert obj["generic"] is True
    assert len(obj["deformed"]) == 3
    for item in obj["deformed"]:
        parse_qfraction(item["str"])


def test_branch_output(capsys):
    code, obj = run_json(capsys, "branch", "--weight", "1,0|0")
    assert code == 0
    lowers = [c["lower"] for c in obj["candidates"]]
    assert lowers == [[0, -1], [0, 0], [1, -1], [1, 0]]
    c = obj["candidates"][1]
    assert c["I0"] == [1] and c["I0bar"] == [2]
    assert c["e_last"] == 1
    assert c["lower_indices"] == [1, 3]


def test_wigner_example(capsys):
    code, obj = run_json(capsys, "wigner", "--weight", "1,0|0",
                         "--lower", "0,0", "--kind", "lower", "--form", "both")
    assert code == 0
    assert obj["entries"]["1"]["str"] == "-q^-2"
    assert obj["entries"]["2"]["str"] == "0"
    assert obj["entries"]["3"]["str"] == "q^-2 + 1"
    assert obj["sum"] == "1"
    assert obj["sum_rule_residual"] == "0"
    assert obj["forms_agree"] is True
    for item in obj["entries"].values():
        parse_qfraction(item["str"])


def test_wigner_coupled(capsys):
    code, obj = run_json(capsys, "wigner", "--weight", "1,0|0",
                         "--lower", "1,0", "--kind", "raise", "--coupled")
    assert code == 0
    assert obj["entries"]["1,1"]["str"] == "1"


def test_invariants_output(capsys):
    code, obj = run_json(capsys, "invariants", "--weight", "1|0")
    assert code == 0
    assert obj["typical"] is True
    assert obj["v"]["str"] == "1"
    assert obj["v_tilde"]["str"] == "1"
    assert obj["C1"]["str"] == "1"


def test_verify_qybe(capsys):
    code, obj = run_json(capsys, "verify", "--m", "1", "--n", "1",
                         "--suite", "qybe")
    assert code == 0
    assert obj["all_pass"] is True
    assert obj["counts"]["FAIL"] == 0
    assert obj["cases"][0]["status"] == "PASS"


def test_determinism(capsys):
    argvs = [
        ("roots", "--weight", "2,1|0", "--variant", "dual"),
        ("wigner", "--weight", "1,0|0", "--lower", "0,0",
         "--kind", "raise", "--form", "both"),
        ("invariants", "--weight", "1,0|0"),
        ("verify", "--m", "1", "--n", "1", "--suite", "coproduct"),
    ]
    for argv in argvs:
        _, first = run(capsys, *argv)
        _, second = run(capsys, *argv)
        assert first == second


def test_computation_error_object(capsys):
    code, obj = run_json(capsys, "wigner", "--weight", "1,0|0",
                         "--lower", "1,1", "--kind", "lower")
    assert code == 1
    assert obj["error"]["type"] == "NotABranching"
    assert obj["error"]["message"]


def test_weight_parse_errors(capsys):
    code, obj = run_json(capsys, "roots", "--weight", "1,0")
    assert code == 1 and obj["error"]["type"] == "QwigError"
    code, obj = run_json(capsys, "roots", "--weight", "1,0|0", "--m", "3")
    assert code == 1 and "conflicts" in obj["error"]["message"]
    code, obj = run_json(capsys, "wigner", "--weight", "1,0|0",
                         "--lower", "0", "--kind", "lower")
    assert code == 1


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["wigner", "--weight", "1,0|0"])  # missing required flags
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["unknown-command"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_csv_output(tmp_path, capsys):
    path = tmp_path / "table.csv"
    code = main(["wigner", "--weight", "1,0|0", "--lower", "0,0",
                 "--kind", "lower", "--out", str(path)])
    capsys.readouterr()
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "k,r,value_string,value_json"
    assert lines[1].startswith("1,,-q^-2,")
    # the JSON cell round-trips to the same exact value
    import csv as _csv

    from qwig import QFraction

    with open(path) as fh:
        rows = list(_csv.reader(fh))
    for row in rows[1:]:
        assert QFraction.from_json(json.loads(row[3])) == parse_qfraction(row[2])
    # CSV is only defined for tables
    code, obj = run_json(capsys, "roots", "--weight", "1|0")
    assert code == 0


def test_out_json_file(tmp_path, capsys):
    path = tmp_path / "roots.json"
    code = main(["roots", "--weight", "1,0|0", "--out", str(path)])
    capsys.readouterr()
    assert code == 0
    obj = json.loads(path.read_text())
    assert obj["classical"] == [1, -1, -2]


def test_verify_jobs_flag(capsys):
    code, obj = run_json(capsys, "verify", "--m", "1", "--n", "1",
                         "--suite", "invariants", "--jobs", "2")
    assert code == 0
    assert obj["counts"]["FAIL"] == 0
