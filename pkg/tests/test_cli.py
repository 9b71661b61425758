import json
import subprocess
import sys

PY = [sys.executable, "-m", "pforge.cli"]

SO3 = json.dumps({"n": 3, "grade": 2,
                  "terms": [{"idx": [0, 1], "coeff": "x2"},
                            {"idx": [1, 2], "coeff": "x0"},
                            {"idx": [0, 2], "coeff": "-x1"}]})
PLANE = json.dumps({"n": 2, "grade": 2,
                    "terms": [{"idx": [0, 1], "coeff": "1"}]})


def run(*args):
    return subprocess.run(PY + list(args), capture_output=True, text=True)


def test_check_ok():
    r = run("check", "-i", SO3)
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["jacobiator_zero"] is True


def test_check_parse_error_exit_1():
    bad = json.dumps({"n": 2, "grade": 2,
                      "terms": [{"idx": [0, 1], "coeff": "x0 +"}]})
    r = run("check", "-i", bad)
    assert r.returncode == 1
    assert json.loads(r.stdout)["error"]["kind"] == "bad-input"


def test_star_degenerate_exit_2():
    p = json.dumps({"n": 4, "grade": 2,
                    "terms": [{"idx": [0, 1], "coeff": "1"}]})
    form = json.dumps({"kind": "form", "n": 4, "grade": 0,
                       "terms": [{"idx": [], "coeff": "1"}]})
    r = run("star", "-i", json.dumps({"p": json.loads(p),
                                      "form": json.loads(form)}))
    assert r.returncode == 2
    assert json.loads(r.stdout)["error"]["kind"] == "degenerate-bivector"


def test_usage_error_exit_1():
    r = run("no-such-command")
    assert r.returncode == 1


def test_byte_determinism():
    args = ("cohomology", "-i", SO3, "--complex", "lich",
            "--max-grade", "1", "--max-weight", "2")
    a = run(*args)
    b = run(*args)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_text_format():
    r = run("casimir", "-i", SO3, "--max-degree", "2", "--format", "text")
    assert r.returncode == 0
    assert "basis:" in r.stdout
    assert "x0^2 + x1^2 + x2^2" in r.stdout


def test_seed_echoed():
    r = run("oracle", "super", "--dim", "3", "--seed", "11",
            "--trials", "5")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["seed"] == 11 and out["ok"] is True


def test_input_from_file(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(PLANE)
    r = run("rank", "-i", str(path), "--point", "0,0")
    assert r.returncode == 0
    assert json.loads(r.stdout)["rank"] == 2


def test_round_trip_through_cli():
    # schouten of [p, p] printed, re-parsed, and re-printed identically
    r = run("schouten", "-i",
            json.dumps({"u": json.loads(SO3), "v": json.loads(SO3)}))
    assert r.returncode == 0
    first = json.loads(r.stdout)["result"]
    r2 = run("schouten", "-i", json.dumps({"u": first, "v": first}))
    assert r2.returncode == 0


def test_ncalg_der_cli():
    alg = json.dumps({"dim": 2,
                      "mult": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]],
                      "unit": [1, 0]})
    r = run("ncalg", "der", "--algebra", alg)
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["der_dim"] == 1
