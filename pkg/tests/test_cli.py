import json

import pytest

from hilbertseries.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip() else None), out.err


def test_expand(capsys):
    code, data, _ = run(capsys, "expand", "--series", "FIX1", "--box", "0,0:2,2")
    assert code == 0
    assert {tuple(c["e"]): int(c["c"]) for c in data["coefficients"]}[(2, 0)] == 4


def test_hilbert_poly(capsys):
    code, data, _ = run(capsys, "hilbert-poly", "--series", "1/(1-t1)^2")
    assert code == 0 and data["threshold"] == [0]
    assert {tuple(t["r"]): t["c"] for t in data["terms"]} == {(0,): "1", (1,): "1"}


def test_restrict(capsys):
    code, data, _ = run(capsys, "restrict", "--series", "1/((1-t1)*(1-t2))", "--I", "1", "--u", "0,2")
    assert code == 0 and data["json"]["nvars"] == 1


def test_check_hilbert_exit_status(capsys):
    code, data, _ = run(capsys, "check-hilbert", "--series", "FIX1", "--m", "3,3", "--exit-status")
    assert code == 3 and data["verdict"] == "no"
    assert data["witness"]["I"] == [1, 2] and data["witness"]["coeff"] == "-2"
    code, data, _ = run(capsys, "check-hilbert", "--series", "FIX1", "--m", "3,3")
    assert code == 0


def test_decompose_then_verify(capsys, tmp_path):
    code, data, _ = run(capsys, "decompose", "--series", "(1+t1*t2)/((1-t1)*(1-t2)^2)")
    assert code == 0 and data["verdict"] == "yes"
    cert = tmp_path / "cert.json"
    cert.write_text(json.dumps(data))
    code, data, _ = run(capsys, "verify", "--series", "(1+t1*t2)/((1-t1)*(1-t2)^2)",
                        "--certificate", str(cert), "--exit-status")
    assert code == 0 and data["verdict"] == "yes"
    code, data, _ = run(capsys, "verify", "--series", "1/((1-t1)*(1-t2)^2)",
                        "--certificate", str(cert), "--exit-status")
    assert code == 3 and data["verdict"] == "no"


def test_json_file_input(capsys, tmp_path):
    f = tmp_path / "h.json"
    f.write_text(json.dumps({"nvars": 1, "num": [{"e": [0], "c": "1"}], "den": [{"v": [1], "mult": 1}]}))
    code, data, _ = run(capsys, "check-hilbert", "--json-file", str(f))
    assert code == 0 and data["verdict"] == "yes"


def test_depth2(capsys):
    code, data, _ = run(capsys, "depth2", "--series", "FIX3_3", "--exit-status")
    assert code == 3 and data["verdict"] == "not-positive-depth"
    assert data["witness"]["sigma"] == "-1"
    code, data, _ = run(capsys, "depth2", "--series", "1/(1-t1)", "--nvars", "2", "--exit-status")
    assert code == 0 and data["verdict"] == "positive-depth"


def test_check_st(capsys):
    code, data, _ = run(capsys, "check-st", "--series", "1", "--nvars", "2", "--box=-1,-1:1,1")
    assert data["verdict"] == "fail" and int(data["witness"]["sigma"]) < 0
    code, data, _ = run(capsys, "check-st", "--series", "1/((1-t1)*(1-t2))")
    assert data["verdict"] == "pass"


def test_star_and_alias(capsys):
    for cmd in ("star", "check-star"):
        code, data, _ = run(capsys, cmd, "--series", "1+t^3", "--alpha", "2", "--beta", "3", "--exit-status")
        assert code == 3
        assert data["witness"]["n"] == 0 and data["witness"]["couple"]["J"] == [6]


def test_couples(capsys):
    code, data, _ = run(capsys, "fundamental-couples", "--alpha", "2", "--beta", "3")
    assert code == 0
    assert [(c["I"], c["J"]) for c in data["couples"]] == [([0], [6]), ([0, 1], [4, 3])]


def test_worked_examples(capsys):
    code, data, err = run(capsys, "paper-suite", "--exit-status")
    assert code == 0 and data["passed"] == data["total"]
    assert "FAIL" not in err


@pytest.mark.parametrize("argv", [
    ["expand", "--series", "1/(1-t1", "--box", "0,0:1,1"],
    ["expand", "--series", "FIX1"],
    ["star", "--series", "1+t^3", "--alpha", "2", "--beta", "4"],
    ["star", "--series", "(1-2*t)/(1-t^[2])", "--alpha", "2", "--beta", "3"],
    ["check-hilbert"],
    ["verify", "--series", "1/(1-t1)", "--certificate", "/nonexistent.json"],
])
def test_errors_exit_2(capsys, argv):
    code, data, err = run(capsys, *argv)
    assert code == 2 and data is None and err.startswith("error:")
