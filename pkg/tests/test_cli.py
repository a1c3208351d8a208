import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from skewprime import cli, examples
from skewprime.scenario import run_scenario

ROOT = Path(__file__).resolve().parents[1]
SCENARIOS = ROOT / "scenarios"


def run(*args, check=False):
    env = dict(os.environ, PYTHONPATH=str(ROOT / "src"))
    return subprocess.run([sys.executable, "-m", "skewprime", *args], capture_output=True,
                          text=True, env=env, check=check)


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


UNDECIDED_ONLY = {
    "schema": 1,
    "ring": {"model": "monomial", "square_zero": True, "domain": True},
    "monoid": {"kind": "natural"},
    "action": {"x": {"shift": 1}},
    "ideal": "zero",
    "query": {"op": "sprime", "method": "witness"},
}


def test_affine_scenario_exit_zero():
    res = run("check", str(SCENARIOS / "affine-a-ass.json"), "--format", "json")
    assert res.returncode == 0
    report = json.loads(res.stdout)
    (ass,) = report["results"][0]["result"]["ass"]
    assert ass["generator"] == "t" and ass["twist"] == 0


def test_up_check_exit_one_with_witness():
    res = run("check", str(SCENARIOS / "up-x2y2.json"), "--format", "json")
    assert res.returncode == 1
    data = json.loads(res.stdout)["results"][0]["result"]["data"]
    assert data == {"X": ["x", "y"], "Y": ["x", "y"]}


def test_undecided_only_exit_two(tmp_path):
    res = run("check", write(tmp_path, "u.json", UNDECIDED_ONLY))
    assert res.returncode == 2


def test_malformed_exit_three():
    res = run("check", str(SCENARIOS / "malformed.json"), "--format", "json")
    assert res.returncode == 3
    err = json.loads(res.stdout)["error"]
    assert err["type"] == "SchemaError" and "qurey" in err["message"]


def test_schema_pointer(tmp_path):
    bad = dict(UNDECIDED_ONLY, ring={"model": "monomial", "domian": True})
    report, code = run_scenario(json.loads(json.dumps(bad)))
    assert code == 3 and report["error"]["pointer"] == "/ring"


@pytest.mark.parametrize("broken", [
    {"schema": 2, "monoid": {"kind": "natural"}, "query": {"op": "validate"}},
    {"schema": 1, "monoid": {"kind": "natural"}, "query": {"op": "frobnicate"}},
    {"schema": 1, "monoid": {"kind": "group"}, "query": {"op": "up-check"}},
    {"schema": 1, "ring": {"model": "point", "field": "Q"}, "monoid": {"kind": "natural"},
     "query": {"op": "validate"}},
    {"schema": 1, "ring": {"model": "point", "field": "Q"}, "monoid": {"kind": "natural"},
     "action": {"x": {"power": 2}}, "ideal": {"vanishing": ["zeta(3,1)"]},
     "query": {"op": "ass"}},
])
def test_input_errors(broken):
    _, code = run_scenario(broken)
    assert code == 3


def test_missing_file_exit_three(tmp_path):
    assert run("check", str(tmp_path / "nope.json")).returncode == 3


def test_json_is_deterministic(tmp_path):
    path = str(SCENARIOS / "ff5-cross-check.json")
    a = run("check", path, "--format", "json", "--seed", "3").stdout
    b = run("check", path, "--format", "json", "--seed", "3").stdout
    assert a == b


def test_out_and_text_derived_from_json(tmp_path):
    out = tmp_path / "r.txt"
    res = run("check", str(SCENARIOS / "affine-a-ass.json"), "--out", str(out))
    assert res.returncode == 0 and res.stdout == ""
    text = out.read_text()
    assert "ass: {V{0} (twist 0)}" in text


def test_batch_jobs_keep_input_order(tmp_path):
    paths = [str(SCENARIOS / n) for n in ("up-x2y2.json", "affine-a-ass.json", "malformed.json")]
    res = run("check", *paths, "--jobs", "2", "--format", "json")
    names = [r["scenario"].get("name") for r in json.loads(res.stdout)["reports"]]
    assert names[:2] == ["up-check on xy = yx, x^2 = y^2", "affine case (a): Q, a = 0, p = 2"]
    assert res.returncode == 3


def test_timing_only_on_request():
    plain = json.loads(run("check", str(SCENARIOS / "up-x2y2.json"), "--format", "json").stdout)
    timed = json.loads(run("check", str(SCENARIOS / "up-x2y2.json"), "--format", "json",
                           "--timing").stdout)
    assert "timing_seconds" not in plain and timed["timing_seconds"] >= 0


def test_list():
    res = run("list")
    assert res.returncode == 0 and len(res.stdout.strip().splitlines()) == 12
    rows = json.loads(run("list", "--format", "json").stdout)
    assert [r["id"] for r in rows] == [e.id for e in examples.CATALOG]
    assert len(json.loads(run("list", "--format", "json", "--group", "affine").stdout)) == 4


GOLDEN_RUNS = [(e.id, []) for e in examples.CATALOG] + [
    ("affine-b", ["--r", "5"]),
    ("shift-chain", ["--n", "infinity"]),
    ("shift-chain", ["--n", "0"]),
]


@pytest.mark.parametrize("example_id,extra", GOLDEN_RUNS)
def test_repro_matches_golden(example_id, extra, capsys):
    code = cli.main(["repro", example_id, *extra, "--format", "json"])
    report = json.loads(capsys.readouterr().out)
    if example_id == "rev-comm":
        assert report["golden"].startswith("computed-only")
    else:
        assert report["golden"] == "match"
    assert code == 0


def test_repro_mismatch_reports_diff(monkeypatch, capsys):
    real = examples.load_golden("up-x2y2")
    tampered = json.loads(json.dumps(real))
    tampered["default"]["results"][0]["label"] = "7 unique"
    monkeypatch.setattr(examples, "load_golden", lambda _id: tampered)
    code = cli.main(["repro", "up-x2y2"])
    out = capsys.readouterr().out
    assert code == 1
    assert "golden: mismatch" in out and "7 unique" in out


def test_repro_errors():
    assert run("repro", "no-such-example").returncode == 3
    assert run("repro", "affine-a", "--r", "3").returncode == 3
