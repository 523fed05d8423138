import io
import json

import pytest

from ordchoquet import verify
from ordchoquet.cli import main
from ordchoquet.fixtures import ordered_eight, two_atom_algebra
from ordchoquet.io import valuation_to_json


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture
def pair_files(tmp_path):
    sys = write(tmp_path, "sys.json",
                {"ground": [1, 2], "family": [[1, 2], [1], [2]], "order": "containment"})
    v = write(tmp_path, "v.json", {"values": {"0": 1}})
    f = write(tmp_path, "f.json", {"values": [3, 5]})
    g = write(tmp_path, "g.json", {"values": [-3, 5]})
    return sys, v, f, g


@pytest.mark.parametrize("method", ["lp", "monge", "classical", "auto"])
def test_integrate_simple_function(pair_files, method):
    sys, v, f, _ = pair_files
    code, out, _ = run(["integrate", sys, v, f, "--method", method])
    assert code == 0
    assert json.loads(out)["value"] == {"exact": "3", "decimal": "3"}


def test_integrate_certificates(pair_files):
    sys, v, f, _ = pair_files
    code, out, _ = run(["integrate", sys, v, f, "--method", "lp", "--certificates"])
    rep = json.loads(out)
    assert code == 0 and rep["certificates"]["packing"]["12"] == "3"


def test_negative_needs_shift(pair_files):
    sys, v, _, g = pair_files
    code, _, err = run(["integrate", sys, v, g])
    assert code == 2 and "--shift" in err
    code, out, _ = run(["integrate", sys, v, g, "--shift"])
    rep = json.loads(out)
    assert code == 0
    assert rep["shift"] == {"lambda": "3", "shift_dependent": False}
    assert rep["value"]["exact"] == "-3"


def test_monge_refuses_uncertified(tmp_path):
    # trivially ordered {123, 12}: the greedy spends element 1 inside 123 and never reaches 12
    sys = write(tmp_path, "s.json", {"ground": [1, 2, 3], "family": [[1, 2, 3], [1, 2]]})
    v = write(tmp_path, "v.json", [0, 1])
    f = write(tmp_path, "f.json", [1, 1, 2])
    code, out, _ = run(["integrate", sys, v, f, "--method", "monge"])
    rep = json.loads(out)
    assert code == 1
    assert rep["witness"] == "12" and rep["monge"] == "0" and rep["lp"] == "1"
    code, out, _ = run(["integrate", sys, v, f, "--method", "monge", "--unchecked"])
    assert code == 0 and json.loads(out)["value"]["exact"] == "0"
    code, out, _ = run(["integrate", sys, v, f, "--method", "lp"])
    assert json.loads(out)["value"]["exact"] == "1"


def test_classify_ordered_eight(tmp_path):
    path = write(tmp_path, "e.json", ordered_eight().to_dict())
    code, out, _ = run(["classify", path])
    rep = json.loads(out)
    assert code == 0 and rep["intersection_system"] and not rep["containment_ordered"]


def test_decompose_belief(tmp_path):
    path = write(tmp_path, "s.json", {"ground": [1, 2], "family": [[1, 2], [1], [2]],
                                      "order": "containment"})
    v = write(tmp_path, "v.json", [3, 1, 1])
    code, out, _ = run(["decompose", path, v])
    rep = json.loads(out)
    assert code == 0 and set(rep["v_minus"].values()) == {"0"}
    code, out, _ = run(["mobius", path, v])
    assert json.loads(out)["beta"] == {"12": "1", "1": "1", "2": "1"}


def test_extend_flags_nonmonotone(tmp_path, remark_pair):
    sys, v = remark_pair
    s = write(tmp_path, "s.json", sys.to_dict())
    vv = write(tmp_path, "v.json", valuation_to_json(v))
    code, out, _ = run(["extend", s, vv])
    rep = json.loads(out)
    assert code == 0 and rep["vhat"]["1235"] == "2" and rep["vhat"]["12345"] == "1"
    assert rep["monotone"] is False


def test_lehrer_fixture(tmp_path):
    sys, p = two_atom_algebra()
    s = write(tmp_path, "s.json", sys.to_dict())
    pp = write(tmp_path, "p.json", valuation_to_json(p))
    f = write(tmp_path, "f.json", [6, 3, 9])
    code, out, _ = run(["lehrer", s, pp, f, "--format", "text"])
    assert code == 0
    assert "exact: 4" in out


def test_bad_input_exit_code(tmp_path):
    missing = str(tmp_path / "nope.json")
    assert run(["classify", missing])[0] == 2
    bad = write(tmp_path, "bad.json", {"ground": [1, 2], "family": [[1]]})
    assert run(["classify", bad])[0] == 2
    assert run(["verify", "no_such_suite"])[0] == 2
    assert run(["frobnicate"])[0] == 2


def test_verify_is_byte_identical():
    a = run(["verify", "mobius", "--seed", "1", "--trials", "100"])
    b = run(["verify", "mobius", "--seed", "1", "--trials", "100"])
    assert a[0] == 0 and a == b
    c = run(["verify", "lehrer", "--seed", "3", "--trials", "10", "--format", "text"])
    assert c == run(["verify", "lehrer", "--seed", "3", "--trials", "10", "--format", "text"])


def test_failing_suite_dumps_replayable_files(tmp_path, monkeypatch):
    real = verify.CHECKS["lehrer"]

    def broken(inst):
        msgs = real(inst)
        return msgs or (["planted failure"] if len(inst["f"]) > 2 else [])

    monkeypatch.setitem(verify.CHECKS, "lehrer", broken)
    code, out, _ = run(["verify", "lehrer", "--trials", "8", "--n-max", "4",
                        "--dump-dir", str(tmp_path)])
    rep = json.loads(out)
    assert code == 1 and rep["replay_files"]
    for path in rep["replay_files"]:
        code, out, _ = run(["verify", "--replay", path])
        assert code == 1 and json.loads(out)["messages"] == ["planted failure"]
    monkeypatch.setitem(verify.CHECKS, "lehrer", real)
    assert run(["verify", "--replay", rep["replay_files"][0]])[0] == 0
