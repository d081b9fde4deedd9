import json
import subprocess
import sys

import pytest

from bnreduce import __version__
from bnreduce.cli import Config, run
from bnreduce.netcore import parse_network

from conftest import NETWORKS


def net_path(name):
    return str(NETWORKS / f"{name}.bnet")


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_config_invariants():
    with pytest.raises(ValueError):
        Config(None, "json", 0, 0, 0)
    with pytest.raises(ValueError):
        Config(None, "yaml", 5, 0, 0)


def test_attractors_json(capsys):
    code, out, _ = invoke(capsys, "attractors", net_path("mediator_reduced"))
    assert code == 0
    doc = json.loads(out)
    assert doc["version"] == __version__
    assert doc["input"]["sha256"]
    assert doc["A"] == 2 and doc["S"] == 0
    assert [a["states"] for a in doc["attractors"]] == [["00", "10"], ["01", "11"]]


def test_attractors_constant_zero_text(capsys):
    code, out, _ = invoke(capsys, "attractors", net_path("constant_zero"), "--format", "text")
    assert code == 0
    assert "S = 1" in out and "fixed  00" in out


def test_attractors_cap(capsys, tmp_path):
    big = tmp_path / "big.bnet"
    big.write_text("".join(f"x{k}, x{(k + 1) % 21}\n" for k in range(21)))
    code, _, err = invoke(capsys, "attractors", str(big))
    assert code == 3 and "exceeds cap" in err
    code, _, _ = invoke(capsys, "attractors", net_path("forward"), "--cap", "2")
    assert code == 3
    code, _, _ = invoke(capsys, "attractors", net_path("forward"), "--cap", "3")
    assert code == 0


def test_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("BNREDUCE_CAP", "2")
    code, _, _ = invoke(capsys, "attractors", net_path("forward"))
    assert code == 3
    monkeypatch.setenv("BNREDUCE_CAP", "zero")
    code, _, _ = invoke(capsys, "attractors", net_path("forward"))
    assert code == 2


def test_reduce_outputs(capsys):
    code, out, _ = invoke(capsys, "reduce", net_path("mediator"), "--eliminate", "x2", "--format", "text")
    assert code == 0
    assert "# eliminated x2 (classical)" in out
    assert parse_network(out) == parse_network("x1, !x1\nx3, x3\n")
    code, out, _ = invoke(capsys, "reduce", net_path("negloop"), "--eliminate", "x2")
    doc = json.loads(out)
    assert doc["steps"][0]["mode"] == "generalized"
    assert doc["index_map"] == {"x1": 0}
    assert parse_network(doc["network"]) == parse_network("x1, !x1\n")


def test_reduce_errors(capsys):
    code, _, err = invoke(capsys, "reduce", net_path("identity"), "--eliminate", "x1")
    assert code == 4 and "x1" in err
    code, _, _ = invoke(capsys, "reduce", net_path("identity"), "--eliminate", "nope")
    assert code == 2


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.bnet"
    bad.write_text("a, a &\n")
    for cmd in ("attractors", "igraph", "pfvs", "bound", "stg", "fixed-points"):
        code, _, err = invoke(capsys, cmd, str(bad))
        assert code == 2 and "line 1" in err
    code, _, _ = invoke(capsys, "attractors", str(tmp_path / "missing.bnet"))
    assert code == 2


def test_bound(capsys):
    code, out, _ = invoke(capsys, "bound", net_path("forward"))
    doc = json.loads(out)
    assert code == 0
    assert doc["pfvs"] == ["w"] and doc["bound"] == 2
    assert doc["certificate"] == ["u", "v"]


def test_chain_roundtrip(capsys):
    code, out, _ = invoke(capsys, "chain", "1", "--format", "text")
    assert code == 0
    assert len(out.strip().splitlines()) == 6
    net = parse_network(out)
    assert net.n == 6


def test_stg_dot(capsys):
    code, out, _ = invoke(capsys, "stg", net_path("two_cycle"), "--format", "dot")
    assert code == 0
    assert out.count("[label=") == 4


def test_igraph_formats(capsys):
    code, out, _ = invoke(capsys, "igraph", net_path("forward"))
    doc = json.loads(out)
    assert {"source": "u", "target": "u", "sign": -1} in doc["edges"]
    code, out, _ = invoke(capsys, "igraph", net_path("forward"), "--format", "dot")
    assert out.startswith("digraph")


def test_dot_rejected_where_no_graph(capsys):
    code, _, _ = invoke(capsys, "attractors", net_path("forward"), "--format", "dot")
    assert code == 2


def test_verify(capsys):
    code, out, _ = invoke(capsys, "verify", net_path("forward"))
    reports = json.loads(out)
    assert code == 0
    assert all(r["verdict"] == "pass" for r in reports)
    code, out, _ = invoke(capsys, "verify", "--count", "5", "--seed", "2", "--format", "text")
    assert code == 0 and out.strip().endswith("passed")


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = invoke(capsys, "pfvs", net_path("two_cycle"), "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["size"] == 1
    assert list(tmp_path.iterdir()) == [target]


def test_stdin_and_module_entry():
    text = (NETWORKS / "two_cycle.bnet").read_text()
    proc = subprocess.run(
        [sys.executable, "-m", "bnreduce", "fixed-points", "--format", "text"],
        input=text, capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1:] == ["00", "11"]


def test_roundtrip_all_bundled_files(capsys):
    for path in sorted(NETWORKS.glob("*.bnet")):
        net = parse_network(path.read_text())
        code, out, _ = invoke(capsys, "reduce", str(path), "--eliminate", "", "--format", "text")
        assert code == 0
        assert parse_network(out) == net
