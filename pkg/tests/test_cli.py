from __future__ import annotations

import json
import subprocess
import sys

import pytest

from resolvent.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_groebner_h27(capsys):
    code, out, _ = run(capsys, "groebner", "--preset", "H27", "--eps", "1", "--mu", "0", "--tau", "0",
                       "--out", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == "resolvent.report/1"
    assert sorted(doc["groebner"]["tips"]) == sorted(["w^3", "x^3", "y^3", "xw", "yw", "yx"])
    assert doc["groebner"]["dimension"] == 27


def test_groebner_nichols_p5(capsys):
    code, out, _ = run(capsys, "groebner", "--preset", "nichols", "--p", "5")
    assert code == 0
    assert "dimension: 25" in out


def test_groebner_from_file(tmp_path, capsys):
    path = tmp_path / "custom.json"
    path.write_text(json.dumps({"characteristic": 3, "generators": ["x"], "relations": ["x^2"]}))
    code, out, _ = run(capsys, "groebner", "--file", str(path), "--out", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["groebner"]["tips"] == ["x^2"]
    assert doc["groebner"]["dimension"] == 2


def test_file_with_parameters(tmp_path, capsys):
    path = tmp_path / "lift.json"
    path.write_text(json.dumps({"characteristic": 3, "generators": ["x"],
                                "relations": ["x^3 - e*x"], "parameters": {"e": 1}}))
    code, out, _ = run(capsys, "groebner", "--file", str(path))
    assert code == 0 and "dimension: 3" in out


def test_betti_ttp_bosonization(capsys):
    code, out, _ = run(capsys, "betti", "--preset", "bosonization", "--p", "3", "--q", "3",
                       "--engine", "ttp", "--max-degree", "4", "--out", "json")
    assert code == 0
    assert json.loads(out)["betti"]["values"] == [1, 2, 5, 7, 12]


def test_betti_trunc(capsys):
    code, out, _ = run(capsys, "betti", "--preset", "trunc", "--exps", "3,3,3", "--max-degree", "3",
                       "--out", "json")
    assert json.loads(out)["betti"]["values"] == [1, 3, 6, 10]


def test_betti_nichols_ttp(capsys):
    code, out, _ = run(capsys, "betti", "--preset", "nichols", "--p", "3", "--engine", "ttp",
                       "--max-degree", "5", "--out", "csv")
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    assert [int(r[3]) for r in rows if r[0] == "betti"] == [1, 2, 3, 4, 5, 6]


def test_engine_preset_mismatch_is_usage_error(capsys):
    code, _, err = run(capsys, "betti", "--preset", "H27", "--engine", "ttp")
    assert code == 2
    assert "ttp engine" in err


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"characteristic": 3, "generators": ["x"], "relations": ["x^"]}))
    code, _, err = run(capsys, "groebner", "--file", str(path))
    assert code == 2
    assert "position" in err


def test_bad_json_and_missing_keys(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert run(capsys, "groebner", "--file", str(path))[0] == 2
    path.write_text(json.dumps({"characteristic": 3}))
    assert run(capsys, "groebner", "--file", str(path))[0] == 2


def test_inconclusive_exit_code(tmp_path, capsys):
    path = tmp_path / "poly.json"
    path.write_text(json.dumps({"characteristic": 3, "generators": ["x", "y"], "relations": ["y*x - x*y"]}))
    code, _, err = run(capsys, "groebner", "--file", str(path))
    assert code == 3
    assert "inconclusive" in err


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_verify_h27_single_tuple(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "h27", "--eps", "1", "--mu", "2", "--tau", "1",
                       "--out", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["summary"]["fail"] == 0
    assert doc["summary"]["pass"] == 1 + 16 + 3


def test_verify_ttp_p3_q9(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ttp", "--p", "3", "--q", "9")
    assert code == 0
    assert "FAIL" not in out


def test_verify_anick_single(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "anick", "--exps", "2,3,4", "--max-degree", "8",
                       "--samples", "20", "--out", "json")
    doc = json.loads(out)
    assert code == 0
    names = [c["name"] for c in doc["checks"]]
    assert any("closed form" in n for n in names)
    assert any("homotopy" in n for n in names)


def test_verify_failure_exit_code(capsys, monkeypatch):
    def broken(report, *args, **kwargs):
        report.add("deliberately broken", False, "forced")

    monkeypatch.setattr("resolvent.suites.h27_suite", broken)
    code, out, _ = run(capsys, "verify", "--suite", "h27")
    assert code == 1
    assert "FAIL deliberately broken: forced" in out


def test_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("RESOLVENT_MAX_DEGREE", "2")
    code, out, _ = run(capsys, "betti", "--preset", "nichols", "--max-degree", "5", "--out", "json")
    assert json.loads(out)["betti"]["values"] == [1, 2, 3]
    monkeypatch.setenv("RESOLVENT_MAX_DEGREE", "lots")
    assert run(capsys, "betti", "--preset", "nichols")[0] == 2


def test_reports_are_byte_stable(capsys):
    argv = ["verify", "--suite", "h27", "--eps", "0", "--mu", "1", "--tau", "2", "--out", "json"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second


def test_timing_is_opt_in(capsys):
    _, out, _ = run(capsys, "groebner", "--preset", "nichols", "--out", "json")
    assert "timing" not in json.loads(out)
    _, out, _ = run(capsys, "groebner", "--preset", "nichols", "--out", "json", "--timing")
    assert "total" in json.loads(out)["timing"]


def test_figures_written(tmp_path, capsys):
    code, _, err = run(capsys, "betti", "--preset", "bosonization", "--engine", "ttp",
                       "--figure-dir", str(tmp_path))
    assert code == 0
    png = tmp_path / "betti.png"
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    assert str(png) in err
    run(capsys, "groebner", "--preset", "H27", "--figure-dir", str(tmp_path))
    assert (tmp_path / "hilbert.png").exists()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "resolvent", "groebner", "--preset", "nichols"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "dimension: 9" in proc.stdout
