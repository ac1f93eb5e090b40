import io
import json
import subprocess
import sys

import pytest

from arcorder.category import decompose
from arcorder.cli import run
from arcorder.reference import four_move_pair


def call(argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def pair_file(tmp_path):
    y, z = four_move_pair()
    path = tmp_path / "pair.json"
    path.write_text(json.dumps({"y": {"decomposition": decompose(y).to_json()}, "z": z.to_json()}))
    rev = tmp_path / "rev.json"
    rev.write_text(json.dumps({"y": z.to_json(), "z": y.to_json()}))
    return path, rev


THREE = ["--alpha", "[2,1,1]", "--beta", "[4,3,2,1]", "--gamma", "[3,2,1]"]


def test_order_comparable(pair_file):
    code, out, _ = call(["order", "--input", str(pair_file[0])])
    data = json.loads(out)
    assert code == 0 and data["leq"] and len(data["witness"]) == 4
    assert data["witness"][0] == {"kind": "A", "m": 6, "n": 5, "r": 3, "s": 1}


def test_order_reversed(pair_file):
    code, out, _ = call(["order", "--input", str(pair_file[1])])
    data = json.loads(out)
    assert code == 1 and data["leq"] is False
    assert data["certificate"]["kind"] == "B2" and data["certificate"]["m"] == 6


def test_order_parallelogram(pair_file):
    code, out, _ = call(["order", "--input", str(pair_file[0]), "--strategy", "parallelogram"])
    assert code == 0 and len(json.loads(out)["witness"]) == 4


def test_sequence(pair_file):
    code, out, _ = call(["sequence", "--input", str(pair_file[0])])
    data = json.loads(out)
    assert code == 0 and len(data["steps"]) == 4
    last = data["steps"][-1]
    assert {json.dumps(x, sort_keys=True) for x in last["result"]} == {
        json.dumps(x, sort_keys=True) for x in decompose(four_move_pair()[0]).to_json()
    }
    assert set(last["ext"]) == {"sub", "middle", "quotient"}


def test_enum_lr():
    code, out, _ = call(["enum-lr"] + THREE)
    assert code == 0 and len(json.loads(out)) == 3


def test_refine_and_dims():
    code, out, _ = call(["refine"] + THREE)
    rows = json.loads(out)
    assert code == 0 and len(rows) == 6
    assert all(r["deviation"] == r["crossings"] for r in rows)
    code, out, _ = call(["dims"] + THREE)
    rows = json.loads(out)
    assert code == 0 and len({r["orbit_dim_embed"] + r["crossings"] for r in rows}) == 1


def test_poset_formats():
    code, out, _ = call(["poset", "--format", "dot"] + THREE)
    assert code == 0 and out.startswith("digraph") and out.count("->") == 6
    code, out, _ = call(["poset"] + THREE)
    data = json.loads(out)
    assert data["minimal"] == [1, 2, 3] and data["maximal"] == [6]


def test_poset_from_lr(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"gamma": [4, 3, 2, 2, 1], "zeta": [4, 3, 3, 3, 2, 1], "beta": [5, 4, 3, 3, 2, 1]}))
    code, out, _ = call(["poset", "--input", str(path)])
    data = json.loads(out)
    assert code == 0 and len(data["nodes"]) == 7 and len(data["hasse_edges"]) == 9


def test_arc(tmp_path):
    path = tmp_path / "k.json"
    path.write_text(json.dumps({"decomposition": [{"kind": "B2", "m": 5, "r": 3}, {"kind": "P1", "m": 4}]}))
    code, out, _ = call(["arc", "--input", str(path)])
    data = json.loads(out)
    assert code == 0 and data["diagram"]["arcs"] == [[5, 3]] and data["crossings"] == 1


def test_validate(tmp_path, monkeypatch):
    good = json.dumps({"gamma": [1], "zeta": [2], "beta": [2]})
    code, out, _ = call(["validate", "--input", "-"], good, monkeypatch)
    assert code == 0 and json.loads(out)["valid"]
    bad = json.dumps({"beta": [4, 4, 2, 1], "gamma": [3, 3, 1], "alpha": [2, 2], "arcs": [[4, 2], [4, 2]]})
    code, out, _ = call(["validate", "--input", "-"], bad, monkeypatch)
    data = json.loads(out)
    assert code == 1 and not data["valid"] and data["code"] == "c"


@pytest.mark.parametrize(
    "argv, stdin, pointer",
    [
        (["order", "--input", "-"], "{not json", "/"),
        (["order", "--input", "-"], '{"y": {"beta": [2], "gamma": [1], "arcs": []}}', "/"),
        (["order", "--input", "-"], '{"y": {"decomposition": [{"kind": "B2", "m": 0}]}, "z": {"decomposition": []}}', "/y"),
        (["enum-lr", "--alpha", "[1]", "--beta", "[2]", "--gamma", "[2, 3]"], None, "/gamma"),
        (["enum-lr", "--alpha", "[1]"], None, "/"),
    ],
)
def test_input_errors(argv, stdin, pointer, monkeypatch):
    code, out, err = call(argv, stdin, monkeypatch)
    assert code == 2 and out == ""
    assert err.startswith(f"error: {pointer}")


def test_unknown_command():
    assert call(["frobnicate"])[0] == 2


def test_oracle():
    code, out, _ = call(["oracle", "--alpha", "[1]", "--beta", "[2]", "--gamma", "[1]", "--prime", "3"])
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["orbits"][0]["count"] == 2
    code, _, err = call(["oracle", "--budget", "10"] + THREE)
    assert code == 2 and "/budget" in err
    code, _, err = call(["oracle", "--prime", "4", "--alpha", "[1]", "--beta", "[2]", "--gamma", "[1]"])
    assert code == 2


def test_repro_matches_goldens():
    code, out, _ = call(["repro"])
    assert code == 0 and out.count(": ok") == 3


def test_byte_stable(pair_file):
    runs = [call(["sequence", "--input", str(pair_file[0])])[1] for _ in range(2)]
    assert runs[0] == runs[1]
    runs = [call(["poset", "--format", "dot"] + THREE)[1] for _ in range(2)]
    assert runs[0] == runs[1]


def test_console_script(pair_file):
    proc = subprocess.run(
        [sys.executable, "-m", "arcorder.cli", "order", "--input", str(pair_file[1])],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1 and '"certificate"' in proc.stdout
