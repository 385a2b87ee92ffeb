import json
import subprocess
import sys

import pytest

from sgh.cli import main
from sgh.core import negative_cycle


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def c4(tmp_path):
    p = tmp_path / "c4.json"
    p.write_text(json.dumps(negative_cycle(4).to_json()))
    return str(p)


@pytest.fixture
def c5(tmp_path):
    p = tmp_path / "c5.json"
    p.write_text(json.dumps(negative_cycle(5).to_json()))
    return str(p)


def test_girths(capsys, c4):
    code, out, _ = run(capsys, "girths", "--in", c4)
    assert code == 0
    assert out.strip() == '{"g00":2,"g01":null,"g10":4,"g11":null}'


def test_weighted_girths(capsys, tmp_path):
    p = tmp_path / "w.json"
    p.write_text(json.dumps({"n": 2, "edges": [[0, 1, 3], [0, 1, -3]]}))
    code, out, _ = run(capsys, "girths", "--in", str(p))
    assert code == 0 and json.loads(out)["g10"] == 6


def test_switch_and_eqv(capsys, c4, tmp_path):
    code, out, _ = run(capsys, "switch", "--in", c4, "--set", "1")
    assert code == 0
    p = tmp_path / "s.json"
    p.write_text(out)
    code, out, _ = run(capsys, "eqv", "--a", c4, "--b", str(p))
    assert code == 0 and json.loads(out)["equivalent"]


def test_eqv_false(capsys, c4, tmp_path):
    p = tmp_path / "pos.json"
    p.write_text(json.dumps({"n": 4, "edges": [[0, 1, "+"], [1, 2, "+"], [2, 3, "+"], [0, 3, "+"]]}))
    code, out, _ = run(capsys, "eqv", "--a", c4, "--b", str(p))
    assert code == 1 and json.loads(out)["switching"] is None


def test_edc_and_spc(capsys, tmp_path):
    code, out, _ = run(capsys, "spc", "--k", "3")
    assert code == 0 and json.loads(out)["n"] == 8
    p = tmp_path / "d.json"
    p.write_text(json.dumps({"n": 2, "edges": [[0, 1, "+"], [0, 1, "-"]]}))
    code, out, _ = run(capsys, "edc", "--in", str(p))
    assert code == 0 and json.loads(out)["n"] == 4


def test_tube_verify_round_trip(capsys, tmp_path):
    cert = tmp_path / "cert.json"
    code, out, _ = run(capsys, "tube", "--g", "6", "--verify", "--out", str(cert))
    assert code == 0 and json.loads(out)["trace"]["completions_checked"] > 0
    code, out, _ = run(capsys, "verify", "--cert", str(cert))
    assert code == 0 and json.loads(out)["valid"]
    lifted = tmp_path / "lifted.json"
    code, _, _ = run(capsys, "lift", "--cert", str(cert), "--out", str(lifted))
    assert code == 0
    code, out, _ = run(capsys, "verify", "--cert", str(lifted))
    assert code == 0


def test_tube_graph_dot(capsys):
    code, out, _ = run(capsys, "tube", "--g", "4", "--emit", "dot")
    assert code == 0 and out.startswith("graph")


def test_wide_and_triples(capsys, c5):
    assert run(capsys, "wide", "--in", c5, "--g", "5")[0] == 0
    assert run(capsys, "wide", "--in", c5, "--g", "6")[0] == 1
    code, out, _ = run(capsys, "triples", "--g", "5", "--triple", "1,-2,2")
    assert code == 0 and json.loads(out)["gadget"]
    code, out, _ = run(capsys, "triples", "--g", "8", "--triple", "6,-4,-3")
    assert code == 1
    code, out, _ = run(capsys, "triples", "--g", "4", "--positive")
    assert code == 0 and json.loads(out)["count"] == len(json.loads(out)["triples"])


def test_dist(capsys, c5):
    code, out, _ = run(capsys, "dist", "--in", c5, "--from", "0", "--g", "5")
    data = json.loads(out)
    assert code == 0 and data["ad"] == [None, 1, 2, -2, -1] and data["f_g"] == [None, 1, 2, 3, 4]


def test_certify(capsys, c5, tmp_path):
    code, out, err = run(capsys, "certify", "--in", c5, "--g", "5")
    assert code == 1 and "no certificate" in err
    code, _, err = run(capsys, "certify", "--in", c5, "--g", "5", "--quiet")
    assert code == 1 and err == ""
    p = tmp_path / "d.json"
    p.write_text(json.dumps({"n": 2, "edges": [[0, 1, "+"], [0, 1, "-"]]}))
    out_path = tmp_path / "cert.json"
    code, _, _ = run(capsys, "certify", "--in", str(p), "--g", "2", "--out", str(out_path))
    assert code == 0
    assert run(capsys, "verify", "--cert", str(out_path))[0] == 0


def test_gen_hom_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--n", "9", "--seed", "4", "--g", "5", "--class", "c11")
    assert code == 0
    src = tmp_path / "src.json"
    src.write_text(out)
    tgt = tmp_path / "tgt.json"
    code, out, _ = run(capsys, "tube", "--g", "5")
    tgt.write_text(out)
    wit = tmp_path / "wit.json"
    code, out, _ = run(capsys, "hom", "--src", str(src), "--tgt", str(tgt), "--witness", str(wit))
    assert code == 0 and json.loads(out)["girth_filter"]
    code, out, _ = run(capsys, "verify", "--hom", str(wit), "--src", str(src), "--tgt", str(tgt))
    assert code == 0 and json.loads(out)["valid"]


def test_hom_none(capsys, c4, tmp_path):
    p = tmp_path / "c6.json"
    p.write_text(json.dumps(negative_cycle(6).to_json()))
    code, out, _ = run(capsys, "hom", "--src", c4, "--tgt", str(p))
    assert code == 1 and json.loads(out)["homomorphism"] is None


def test_gen_infeasible(capsys):
    assert run(capsys, "gen", "--n", "5", "--seed", "0", "--g", "4", "--class", "c11")[0] == 2


def test_export(capsys, c4):
    code, out, _ = run(capsys, "export", "--in", c4)
    assert code == 0 and json.loads(out) == negative_cycle(4).to_json()


@pytest.mark.parametrize(
    "argv",
    [
        ["nope"],
        ["girths"],
        ["girths", "--in", "/does/not/exist.json"],
        ["verify"],
        ["triples", "--g", "5", "--triple", "1,2"],
        ["switch", "--in", "x", "--set", "a,b"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_bad_json(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{")
    assert run(capsys, "girths", "--in", str(p))[0] == 2


def test_console_script_module():
    out = subprocess.run(
        [sys.executable, "-m", "sgh.cli", "spc", "--k", "1"], capture_output=True, text=True
    )
    assert out.returncode == 0 and json.loads(out.stdout)["n"] == 2


def test_byte_identical_reruns(capsys):
    argv = ["gen", "--n", "11", "--seed", "9", "--g", "4", "--class", "c10"]
    first = run(capsys, *argv)
    assert first == run(capsys, *argv)
