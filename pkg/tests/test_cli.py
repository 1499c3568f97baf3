import json
from pathlib import Path

import numpy as np
import pytest

from eframes import cli
from eframes.errors import ComputationError

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *args):
    code = cli.main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def as_complex(rows):
    return np.array([[complex(*z) for z in r] for r in rows])


def test_spec_validate_ok(capsys):
    code, out, _ = run(capsys, "spec", "validate", str(FIXTURES / "paper_example_1.json"))
    assert code == 0
    assert json.loads(out)["valid"] is True


def test_spec_validate_missing_truncation(capsys, tmp_path):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"E": {"kind": "diagonal", "rule": {"type": "constant", "value": 1}}}))
    code, out, err = run(capsys, "spec", "validate", str(p))
    assert code == 2 and out == ""
    e = json.loads(err)["error"]
    assert e["path"] == "/truncation" and e["exit_code"] == 2


def test_spec_validate_wrong_entry_count(capsys, tmp_path):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"truncation": {"ambient_dim": 3},
                             "E": {"kind": "dense", "entries": [[1, 2, 3], [4, 5, 6]]}}))
    code, _, err = run(capsys, "spec", "validate", str(p))
    assert code == 2 and json.loads(err)["error"]["path"] == "/E"


def test_frame_bounds_onb(capsys):
    code, out, _ = run(capsys, "frame", "bounds", str(FIXTURES / "onb.json"))
    assert code == 0 and json.loads(out) == {"A": 1.0, "B": 1.0}


def test_frame_bounds_etransform(capsys):
    code, out, _ = run(capsys, "frame", "bounds", "--etransform", str(FIXTURES / "paper_example_1.json"))
    b = json.loads(out)
    assert code == 0 and b["A"] == pytest.approx(1) and b["B"] == pytest.approx(1)


def test_frame_bounds_missing_component(capsys):
    code, _, err = run(capsys, "frame", "bounds", "--etransform", str(FIXTURES / "onb.json"))
    assert code == 2 and json.loads(err)["error"]["path"] == "/E"


def test_multiplier_matrix_example2(capsys):
    code, out, _ = run(capsys, "multiplier", "matrix", str(FIXTURES / "paper_example_2.json"))
    assert code == 0
    M = as_complex(json.loads(out)["matrix"])
    assert np.max(np.abs(M - np.diag([1, 1 / 2, 1 / 3, 1 / 4]))) <= 1e-12


def test_multiplier_apply(capsys):
    code, out, _ = run(capsys, "multiplier", "apply", str(FIXTURES / "paper_example_2.json"),
                       "--vector", "[1, [0, 2], 0, 4]")
    assert code == 0
    r = [complex(*z) for z in json.loads(out)["result"]]
    assert np.allclose(r, [1, 1j, 0, 1], atol=1e-15)
    code, _, err = run(capsys, "multiplier", "apply", str(FIXTURES / "paper_example_2.json"), "--vector", "[1,")
    assert code == 2 and json.loads(err)["error"]["path"] == "--vector"


def test_etransform_apply(capsys):
    code, out, _ = run(capsys, "etransform", "apply", str(FIXTURES / "paper_example_1.json"))
    doc = json.loads(out)
    assert code == 0 and doc["N"] == 8
    assert np.max(np.abs(as_complex(doc["terms"]) - np.eye(8))) <= 1e-12


def test_hs_check(capsys):
    code, out, _ = run(capsys, "etransform", "hs-check", str(FIXTURES / "hs_diag.json"), "--terms", "100")
    doc = json.loads(out)
    assert code == 0 and doc["partial"] == pytest.approx(1.08232, abs=1e-5) and doc["tail_bound"] <= 3.4e-7


def test_output_is_byte_identical(capsys):
    args = ("multiplier", "matrix", str(FIXTURES / "paper_example_1.json"))
    assert run(capsys, *args)[1] == run(capsys, *args)[1]
    v = ("verify", "thm-analysis", "--seed", "3")
    assert run(capsys, *v)[1] == run(capsys, *v)[1]


def test_verify_suite_and_seed_env(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "paper-example-2")
    doc = json.loads(out)
    assert code == 0 and doc["all_pass"] and doc["seed"] == 0
    monkeypatch.setenv("EFRAME_SEED", "17")
    assert json.loads(run(capsys, "verify", "thm-synthesis", "--cases", "3")[1])["seed"] == 17
    assert json.loads(run(capsys, "verify", "thm-synthesis", "--cases", "3", "--seed", "4")[1])["seed"] == 4


def test_verify_out_files(capsys, tmp_path):
    csv_path, json_path = tmp_path / "r.csv", tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "all", "--out", str(csv_path))
    assert code == 0 and json.loads(out)["all_pass"]
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "suite,case_id,residual,bound,pass" and len(lines) > 14
    code, _, _ = run(capsys, "verify", "commutation", "--out", str(json_path))
    assert code == 0 and json.loads(json_path.read_text())["suite"] == "commutation"


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "nope")
    assert code == 2 and "unknown suite" in json.loads(err)["error"]["message"]


def test_suites_listing(capsys):
    code, out, _ = run(capsys, "suites")
    suites = json.loads(out)["suites"]
    assert code == 0 and len(suites) == 14 and all(s["anchor"] for s in suites)


def test_usage_errors_are_json(capsys):
    code, _, err = run(capsys, "etransform", "hs-check", str(FIXTURES / "hs_diag.json"))
    assert code == 2 and json.loads(err)["error"]["type"] == "UsageError"


def test_computation_error_exit_code(capsys, monkeypatch):
    def boom(*a, **k):
        raise ComputationError("no convergence")

    monkeypatch.setattr(cli.et, "e_transform", boom)
    code, _, err = run(capsys, "etransform", "apply", str(FIXTURES / "paper_example_1.json"))
    assert code == 1 and json.loads(err)["error"]["type"] == "ComputationError"


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0 and "multiplier" in out
