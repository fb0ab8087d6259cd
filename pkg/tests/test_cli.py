import json

import pytest

from dynfrt import io
from dynfrt.cli import main, run


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    d = tmp_path_factory.mktemp("cli")
    q5 = str(d / "q5.json")
    x = str(d / "x.json")
    assert run(["dybm", "q5", "-o", q5])[0] == 0
    assert run(["lop", "sigma", q5, "-o", x])[0] == 0
    broken = d / "broken.json"
    broken.write_text(json.dumps({"kind": "quasigroup", "size": 3,
                                  "table": [[0, 1, 2], [1, 2, 0], [2, 1, 1]]}))
    element = d / "element.json"
    element.write_text(json.dumps([{"coeff": "1/2", "word": [{"L": [1, 1]}, {"L": [2, 2]}]}]))
    return {"q5": q5, "x": x, "broken": str(broken), "element": str(element), "dir": d}


def test_dybm_check_counts_625(files):
    code, rep = run(["dybm", "check", files["q5"], "--qdybe"])
    assert code == 0
    assert rep["checks"] == [{"name": "qdybe", "pass": True, "instances": 625}]


def test_validate_broken_reports_the_column(files):
    code, rep = run(["validate", files["broken"]])
    assert code == 1
    assert rep["checks"][0]["witness"]["failing_columns"] == [1]


def test_wgroup_order(files):
    code, rep = run(["wgroup", "order", files["q5"]])
    assert code == 0
    assert rep["order"] == 120
    assert rep["generator_orders"] == [6, 2, 5, 4, 4]


def test_wgroup_cap_overflow(files):
    code, rep = run(["wgroup", "order", files["q5"], "--cap", "10"])
    assert code == 1
    assert "10" in rep["checks"][-1]["error"]


def test_lop_check_and_tensor(files):
    assert run(["lop", "check", files["q5"], files["x"]])[0] == 0
    out = str(files["dir"] / "xx.json")
    code, rep = run(["lop", "tensor", files["x"], files["x"], "--sigma", files["q5"], "-o", out])
    assert code == 0
    assert io.load(out)["kind"] == "loperator"


def test_frt_demo():
    code, rep = run(["frt", "demo-q5"])
    assert code == 0
    assert rep["steps"]["counit_value_at_0"] == "1"
    assert rep["steps"]["group_level"]["solutions_of_xy_eq_12"] == [[1, 2]]


def test_frt_eval(files):
    code, rep = run(["frt", "eval", files["q5"], files["element"], "--no-certify"])
    assert code == 0
    assert set(rep["images"]) == {"counit", "pi_sigma", "pi_sigma_square"}


def test_unknown_command_exits_2():
    code, rep = run(["nonsense"])
    assert code == 2 and "error" in rep


def test_missing_file_exits_2():
    assert run(["dybm", "check", "/nonexistent.json"])[0] == 2


def test_malformed_file_exits_2(files):
    p = files["dir"] / "malformed.json"
    p.write_text(json.dumps({"kind": "dybm", "h_size": 1}))
    assert run(["dybm", "check", str(p)])[0] == 2


def test_reports_are_deterministic(files, capsys):
    outs = []
    for _ in range(2):
        main(["wgroup", "order", files["q5"]])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    assert "timing_ms" not in outs[0]


def test_timing_flag(files):
    _, rep = run(["dybm", "check", files["q5"], "--qdybe", "--timing"])
    assert "timing_ms" in rep["checks"][0]
