import json

from qrep.cli import run


def out_json(capsys, argv):
    code = run(argv)
    return code, json.loads(capsys.readouterr().out) if code == 0 else None


def test_verify_level_four(capsys):
    code, data = out_json(capsys, ["verify", "--level", "4", "--genus", "1"])
    assert code == 0 and all(data["checks"].values())


def test_decompose(capsys):
    code, data = out_json(capsys, ["decompose", "--genus", "1", "--level", "4", "--series", "D"])
    assert code == 0 and data["dims_only"] == [2, 3]


def test_d_at_odd_level_is_a_usage_error(capsys):
    assert run(["zmatrix", "--level", "3", "--series", "D"]) == 2


def test_unknown_flag(capsys):
    assert run(["zmatrix", "--bogus"]) == 2
    assert "bogus" in capsys.readouterr().err


def test_csv_and_pretty(capsys):
    assert run(["--format", "csv", "zmatrix", "--level", "4", "--series", "D"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "1,0,0,0,1"
    assert run(["--format", "pretty", "category", "info", "--level", "2"]) == 0
    assert "su(2)_2" in capsys.readouterr().out
    assert run(["--format", "csv", "category", "info", "--level", "2"]) == 2


def test_output_is_deterministic(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert run(["--output", str(p), "rig", "table", "--level", "10"]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert json.loads(paths[0].read_text(encoding="utf-8"))["table"]["ExE"]["sum"] == "2[E]"


def test_algebra_round_trip(tmp_path, capsys):
    path = tmp_path / "d6.json"
    assert run(["--output", str(path), "algebra", "build", "--level", "6", "--series", "D"]) == 0
    code, data = out_json(capsys, ["algebra", "check", "--file", str(path)])
    assert code == 0 and all(data["checks"].values())
    assert run(["algebra", "check"]) == 2


def test_failed_check_exits_one(tmp_path, capsys):
    path = tmp_path / "bad.json"
    assert run(["--output", str(path), "algebra", "build", "--level", "4", "--series", "D"]) == 0
    obj = json.loads(path.read_text(encoding="utf-8"))
    # a unit that acts by 3 on the second summand
    obj["m"]["0,1,1"]["coeffs"][0] = [3, 1]
    path.write_text(json.dumps(obj), encoding="utf-8")
    assert run(["algebra", "check", "--file", str(path)]) == 1


def test_net_eval(tmp_path, capsys):
    path = tmp_path / "loop.json"
    path.write_text(json.dumps({"level": 2, "steps": [{"op": "cup", "pos": 0, "label": 2}, {"op": "cap", "pos": 0}]}),
                    encoding="utf-8")
    code, data = out_json(capsys, ["net", "eval", "--file", str(path)])
    assert code == 0 and abs(data["value"]["float"][0] - 1.0) < 1e-12


def test_basis_list(capsys):
    code, data = out_json(capsys, ["basis", "list", "--genus", "2", "--level", "2"])
    assert code == 0 and data["dimension"] == len(data["trees"]) == 10
