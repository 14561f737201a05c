import io
import json

import pytest

from leviscope import __version__
from leviscope.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def report(*argv):
    code, out, _ = call("--json", *argv)
    return code, json.loads(out)


@pytest.fixture
def files(tmp_path):
    made = {}
    for name, text in {
        "a": "y1^2 + y2^2\n",
        "d": "x*y1^2 + y2^2\n",
        "w": "# W1 normal form\nx^3*y1^2 + y2^2 + y1^4\n",
        "sphere": "z1*~z1 + z2*~z2 - 1\n",
        "bad": "y1^2 +* y2\n",
        "line": "vars: n=2\ny1^2\n",
    }.items():
        p = tmp_path / f"{name}.poly"
        p.write_text(text)
        made[name] = str(p)
    return made


def test_check_levi(files):
    code, rep = report("check-levi", files["a"])
    assert code == 0 and rep["result"]["is_levi_flat"] is True
    assert rep["command"] == "check-levi" and rep["version"] == __version__
    assert set(rep) == {"command", "inputs", "result", "timing_ms", "version"}
    code, rep = report("check-levi", files["sphere"])
    assert code == 1 and rep["result"]["is_levi_flat"] is False
    assert rep["result"]["witness"] is not None


def test_plain_output(files):
    code, out, _ = call("check-levi", files["a"])
    assert code == 0
    assert "is_levi_flat: True" in out.splitlines()


def test_ils(files):
    code, rep = report("ils", files["d"])
    assert code == 0
    assert rep["result"]["c"] == 1 and rep["result"]["is_ils"] is True
    assert rep["result"]["residue_basis"] == ["y1^2"]


def test_ils_not_stabilized(files):
    code, rep = report("ils", files["line"], "--bound", "8")
    assert code == 1
    assert rep["result"]["is_ils"] is None
    assert rep["result"]["c"] == "not stabilized by bound"


def test_classify(files):
    code, rep = report("classify", files["w"])
    assert code == 0 and rep["result"]["match"] == "W_1_inf"
    code, rep = report("classify", files["d"])
    assert rep["result"]["match"] == "D_inf"


def test_json_stable(files):
    _, a = report("ils", files["d"])
    _, b = report("ils", files["d"])
    a.pop("timing_ms")
    b.pop("timing_ms")
    assert a == b


def test_parse_error(files):
    code, out, err = call("check-levi", files["bad"])
    assert code == 2 and out == ""
    assert err.startswith("error: parse error at line 1, column 7")


def test_missing_file(tmp_path):
    code, _, err = call("check-levi", str(tmp_path / "nope.poly"))
    assert code == 2 and "cannot read" in err


def test_unknown_command():
    code, _, _ = call("frobnicate")
    assert code == 2
    code, _, _ = call()
    assert code == 2


def test_blowup(files):
    code, rep = report("blowup", files["a"])
    r = rep["result"]
    assert code == 0 and r["multiplicity"] == 2
    assert r["strict_transform_normalized"] == "t^2 + s^2 + v^2 + 1"
    assert r["alpha_transform"] == "(t*u)*dt + (s*u)*ds + (t^2 + s^2)*du"
    assert r["chart"] == "pi(x, t, s, z, u, v) = (x, t*u, s*u, z, u, u*v)"


def test_sing_and_segre(files):
    code, rep = report("sing", files["a"])
    assert code == 0 and rep["result"]["dimension"] == 2
    code, rep = report("segre", files["a"], "--point", "0,0,0")
    assert code == 0 and rep["result"]["degenerate"] is False


def test_theorem_a(files):
    code, rep = report("check-theorem-a", files["a"], "--normal-form", "A")
    assert code == 0 and rep["result"]["all_hypotheses_hold"] is True
    code, _, err = call("check-theorem-a", files["a"], "--normal-form", "nonsense")
    assert code == 2 and err.startswith("error:")


def test_catalog_verify():
    code, rep = report("catalog", "verify", "--n", "2")
    assert code == 0
    rows = rep["result"]["entries"]
    assert rep["result"]["catalog_ok"] is True
    assert {r["entry"] for r in rows} >= {"A\u221e", "D\u221e"}
    assert all(r["ok"] for r in rows if "expected_levi_flat" not in r)
    control = [r for r in rows if "expected_levi_flat" in r]
    assert len(control) == 1
