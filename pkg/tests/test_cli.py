import json

import mpmath
import pytest

from polyzeta import evaluator as ev
from polyzeta.cli import main

ZETA2 = {"nodes": [{"id": "a", "label": "1"}, {"id": "b", "label": "0"}], "cover": [["a", "b"]]}


@pytest.fixture(autouse=True)
def _restore_max_terms():
    saved = ev.MAX_TERMS
    yield
    ev.MAX_TERMS = saved


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_finite(capsys):
    assert run(capsys, "finite", "3", "2,1") == (0, "5/12\n", "")
    code, out, _ = run(capsys, "finite", "2", "1", "--star")
    assert out.strip() == "3/2" and code == 0


def test_algebra_commands(capsys):
    assert run(capsys, "stuffle", "1", "1")[1].strip() == "2*(1,1) + (2)"
    code, out, _ = run(capsys, "starexpand", "2,1,3")
    assert code == 0 and out.count("(") == 4
    code, out, _ = run(capsys, "circledstar", "2,1", "1,1")
    assert code == 0 and out.strip() == "2*(3,1,1) + (3,2)"


def test_eval_commands(capsys):
    code, out, _ = run(capsys, "eval", "mzv", "2", "--prec", "96")
    assert code == 0
    with mpmath.workprec(110):
        assert abs(mpmath.mpf(out.split()[0]) - mpmath.pi ** 2 / 6) < 1e-25
    code, out, _ = run(capsys, "eval", "li", "1", "--args", "1/2")
    with mpmath.workprec(140):
        assert code == 0 and abs(mpmath.mpf(out.split()[0]) - mpmath.log(2)) < 1e-30
    code, out, _ = run(capsys, "eval", "ky", "2", "1")
    with mpmath.workprec(140):
        assert code == 0 and abs(mpmath.mpf(out.split()[0]) - mpmath.zeta(3)) < 1e-30


def test_bad_input_exits_2(capsys):
    assert run(capsys, "finite", "3", "2,x")[0] == 2
    assert run(capsys, "eval", "mzv", "1")[0] == 2  # divergent
    assert run(capsys, "eval", "li", "2")[0] == 2  # no --args
    assert run(capsys, "verify", "BBB-4.1", "--params", "m=-1,n=0")[0] == 2
    assert run(capsys, "verify", "NOPE")[0] == 2
    assert run(capsys, "verify", "suite", "nope")[0] == 2
    assert run(capsys, "--bogus")[0] == 2
    assert run(capsys, "finite", "3", "2", "--prec", "0")[0] == 2


def test_verify_single_and_list(capsys):
    code, out, _ = run(capsys, "verify", "BBB-4.1", "--params", "m=0,n=0")
    assert code == 0 and out.startswith("PASS BBB-4.1[") and "1/1 passed" in out
    code, out, _ = run(capsys, "verify", "list")
    assert code == 0 and "KY-EXAMPLE" in out and "REL-DEPTH3" in out


def test_verify_failure_exits_1(capsys):
    # the general display is false at k = 1
    code, out, _ = run(capsys, "verify", "THM-3.1", "--params", "m=1,2;p=1;display=general")
    assert code == 1 and out.startswith("FAIL")


def test_verify_suite_json_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "verify", "suite", "posets", "--json", str(a))[0] == 0
    assert run(capsys, "verify", "suite", "posets", "--json", str(b), "--jobs", "2")[0] == 0
    assert a.read_bytes() == b.read_bytes()
    rep = json.loads(a.read_text())
    assert rep["count"] == rep["passed"] > 0 and rep["failed"] == []
    rec = rep["records"][0]
    for key in ("family", "params", "lhs_value", "rhs_value", "residual", "bound", "pass", "notes"):
        assert key in rec
    assert "seconds" not in rec


def test_timings_flag(capsys, tmp_path):
    p = tmp_path / "t.json"
    assert run(capsys, "verify", "suite", "posets", "--timings", "--json", str(p))[0] == 0
    assert all("seconds" in r for r in json.loads(p.read_text())["records"])


def test_poset_commands(capsys, tmp_path):
    f = tmp_path / "z2.json"
    f.write_text(json.dumps(ZETA2))
    code, out, _ = run(capsys, "poset", "eval", str(f))
    with mpmath.workprec(140):
        assert code == 0 and abs(mpmath.mpf(out.split()[0]) - mpmath.pi ** 2 / 6) < 1e-30
    code, out, _ = run(capsys, "poset", "expand", str(f))
    assert code == 0 and out.strip() == "1 * I(0,1)"

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"nodes": [{"id": "a", "label": "0"}, {"id": "b", "label": "1"}],
                               "cover": [["a", "b"]]}))
    assert run(capsys, "poset", "eval", str(bad))[0] == 2
    assert run(capsys, "poset", "eval", str(tmp_path / "missing.json"))[0] == 2
    (tmp_path / "junk.json").write_text("{not json")
    assert run(capsys, "poset", "eval", str(tmp_path / "junk.json"))[0] == 2


def test_json_payload_for_plain_commands(capsys, tmp_path):
    p = tmp_path / "s.json"
    assert run(capsys, "stuffle", "1", "2", "--json", str(p))[0] == 0
    data = json.loads(p.read_text())
    assert data["text"] == "(2,1) + (1,2) + (3)"


def test_max_terms_flag(capsys):
    code, _, err = run(capsys, "eval", "li", "3", "--args", "9/10", "--prec", "256", "--max-terms", "10")
    assert code == 2 and "cannot evaluate" in err
