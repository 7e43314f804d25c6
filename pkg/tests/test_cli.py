"""Command-line interface: wire formats, exit codes, determinism."""

import io
import json

import pytest

from gl3weights.cli import run


def invoke(capsys, *argv, stdin=None):
    code = run(list(argv), stdin=io.StringIO(stdin) if stdin else None)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decompose_exact_bytes(capsys):
    code, out, _ = invoke(capsys, "decompose", "--n", "10", "--p", "7")
    assert code == 0
    assert out == '{"case":"I","x":3,"y":1,"z":0}\n'


def test_decompose_divisible(capsys):
    code, out, _ = invoke(capsys, "decompose", "--n", "114", "--p", "7")
    assert code == 0
    assert json.loads(out) == {"case": "divisible"}


def test_dims(capsys):
    code, out, _ = invoke(capsys, "dims", "--p", "7", "--F", "5,3,1")
    assert code == 0
    assert json.loads(out) == {"p": 7, "F": [5, 3, 1], "dim": 27, "alcove": "lower"}


def test_dims_canonicalizes_input(capsys):
    code, out, _ = invoke(capsys, "dims", "--p", "29", "--F", "8,-1,-12")
    assert code == 0
    assert json.loads(out)["F"] == [36, 27, 16]


def test_predict(capsys):
    code, out, _ = invoke(
        capsys, "predict", "--p", "29", "--xi", "123", "--mu", "17,9,0"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["type"]["niveau"] == 3
    assert len(doc["weights"]) == 9
    assert [15, 8, 0] in doc["weights"]
    assert doc["weights"] == sorted(doc["weights"])


def test_predict_by_orbit_rep_agrees(capsys):
    code1, out1, _ = invoke(
        capsys, "predict", "--p", "29", "--xi", "123", "--mu", "17,9,0"
    )
    rep = json.loads(out1)["type"]["orbit_rep"]
    code2, out2, _ = invoke(capsys, "predict", "--p", "29", "--orbit-rep", str(rep))
    assert code1 == code2 == 0
    assert json.loads(out1)["weights"] == json.loads(out2)["weights"]


def test_eliminate(capsys):
    code, out, _ = invoke(
        capsys, "eliminate", "--p", "29", "--F", "32,16,0", "--orbit-rep", "163"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["branch"] == "intersection"
    assert doc["verdict"] == "consistent"
    assert doc["intersection"] == [163, 499, 527, 1003]
    assert set(doc["lift_sets"]) == {
        "principal_series", "cuspidal", "cuspidal_dual",
    }


def test_cycle_json(capsys):
    code, out, _ = invoke(
        capsys, "cycle", "--p", "29", "--start", "15,8,0",
        "--xi", "123", "--mu", "17,9,0",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "complete"
    assert doc["case"] == "direct"
    assert len(doc["nodes"]) == 9
    assert len(doc["edges"]) == 12
    assert len(doc["non_singletons"]) == 6
    assert doc["stuck"] is None


def test_cycle_dot(capsys):
    args = ("cycle", "--p", "29", "--start", "15,8,0",
            "--xi", "123", "--mu", "17,9,0", "--dot")
    code, out, _ = invoke(capsys, *args)
    assert code == 0
    assert out.startswith("digraph weight_cycling {")
    assert out.count("->") == 12
    code2, out2, _ = invoke(capsys, *args)
    assert out2 == out


def test_breuil(capsys):
    code, out, _ = invoke(
        capsys, "breuil", "--p", "7", "--d", "3", "--r", "2",
        "--heights", "684,684,684", "--k0", "100",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["kappa0"] == 214
    assert doc["is_maximal"] is True
    assert doc["exponents"] == [100, 16, 112]


def test_breuil_inconsistent_heights_is_domain_error(capsys):
    code, out, _ = invoke(
        capsys, "breuil", "--p", "29", "--d", "3", "--r", "2",
        "--heights", "3,1,2", "--k0", "100",
    )
    assert code == 1
    assert "error" in json.loads(out)


def test_sweep_deterministic(capsys):
    args = ("sweep", "--suite", "weights", "--p", "7", "--seed", "1",
            "--count", "25")
    code, out, _ = invoke(capsys, *args)
    assert code == 0
    doc = json.loads(out)
    assert doc["failures"] == []
    assert doc["checks"] > 0
    _, out2, _ = invoke(capsys, *args)
    assert out2 == out


def test_domain_error_exit_code(capsys):
    code, out, _ = invoke(capsys, "dims", "--p", "7", "--F", "9,3,1")
    assert code == 1
    doc = json.loads(out)
    assert doc["error"]["type"] == "ValueError"


def test_usage_error_missing_type(capsys):
    code, out, err = invoke(capsys, "predict", "--p", "29")
    assert code == 2
    assert out == ""
    assert "error" in err


def test_query_envelope(capsys):
    env = json.dumps(
        {"version": 1, "command": "decompose", "params": {"n": 10, "p": 7}}
    )
    code, out, _ = invoke(capsys, "query", stdin=env)
    assert code == 0
    assert out == '{"case":"I","x":3,"y":1,"z":0}\n'


def test_query_envelope_full_commands(capsys):
    env = json.dumps({
        "version": 1,
        "command": "eliminate",
        "params": {
            "p": 29,
            "weight": [32, 16, 0],
            "type": {"xi": "132", "mu": [17, 6, 0]},
        },
    })
    code, out, _ = invoke(capsys, "query", stdin=env)
    assert code == 0
    assert json.loads(out)["branch"] == "intersection"


def test_query_bad_version(capsys):
    env = json.dumps({"version": 2, "command": "dims", "params": {}})
    with pytest.raises(SystemExit):
        run(["query"], stdin=io.StringIO(env))
    assert "version" in capsys.readouterr().err


def test_query_unknown_command(capsys):
    env = json.dumps({"version": 1, "command": "nope", "params": {}})
    with pytest.raises(SystemExit):
        run(["query"], stdin=io.StringIO(env))
    assert "unknown command" in capsys.readouterr().err


def test_query_malformed(capsys):
    with pytest.raises(SystemExit):
        run(["query"], stdin=io.StringIO("not json"))
    assert "malformed" in capsys.readouterr().err
