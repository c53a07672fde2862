import json

import pytest

from cli import inspect_cmd
from lib import harness
from richardson import main

WORKED = ["--n", "5", "--v", "12534", "--word", "4,3,2,1,4,3,2,3,4"]


def test_pds_json(capsys):
    assert main(["pds", *WORKED, "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["hollow"] == [5, 8]


def test_pds_text(capsys):
    assert main(["pds", *WORKED]) == 0
    out = capsys.readouterr().out
    assert "Mask:   000010010" in out
    assert "Unipeak word: yes" in out


def test_diagram(capsys):
    assert main(["diagram", "--n", "2", "--word", "1"]) == 0
    assert "1 X" in capsys.readouterr().out


def test_seed_to_file(tmp_path, capsys):
    path = tmp_path / "seed.json"
    code = main(["seed", "--n", "3", "--word", "2,1,2", "--construction", "leclerc",
                 "--format", "json", "--output", str(path)])
    assert code == 0
    assert f"✓ Wrote {path}" in capsys.readouterr().out
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["construction"] == "leclerc"
    assert [var["label"] for var in data["variables"]] == [1, 2, 3]


def test_seed_text(capsys):
    assert main(["seed", *WORKED]) == 0
    out = capsys.readouterr().out
    assert "Ingermanson seed: 7 variables" in out


def test_quiver_text(capsys):
    assert main(["quiver", "--n", "3", "--word", "2,1,2"]) == 0
    out = capsys.readouterr().out
    assert "Frozen: [1, 2]" in out
    assert "2 -> 3" in out and "3 -> 1" in out


def test_eval_minor(capsys):
    assert main(["eval-minor", "--rows", "1,2", "--cols", "1,2", "--matrix", "1,2;3,4"]) == 0
    assert "D[1,2|1,2] = -2" in capsys.readouterr().out
    assert main(["eval-minor", "--rows", "1", "--cols", "2", "--matrix", "1/2,3/4;0,1"]) == 0
    assert "D[1|2] = 3/4" in capsys.readouterr().out


def test_eval_minor_random_is_seeded(capsys):
    args = ["eval-minor", "--rows", "1,2", "--cols", "2,3", "--n", "3", "--seed", "5"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first


def test_verify_quiet(capsys):
    assert main(["verify", "--n", "2", "--checks", "appearance,quiver", "--quiet"]) == 0
    assert capsys.readouterr().out == ""


def test_verify_report(tmp_path, capsys):
    path = tmp_path / "report.json"
    code = main(["verify", "--n", "3", "--checks", "appearance,variables", "--trials", "2",
                 "--no-timing", "--output", str(path)])
    assert code == 0
    assert "✓ All 2 checks passed" in capsys.readouterr().out
    report = json.loads(path.read_text(encoding="utf-8"))
    assert report["ok"]
    assert "seconds" not in report["checks"]["appearance"]


def test_verify_failure_exit_code(monkeypatch, capsys):
    monkeypatch.setitem(harness.CASE_CHECKS, "appearance", lambda cd: harness.CheckOutcome(False, "forced"))
    assert main(["verify", "--n", "2", "--checks", "appearance"]) == 1
    assert "✗ Failing checks: appearance" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    ["pds", "--v", "12a", "--word", "1"],
    ["pds", "--n", "3", "--word", "1,1"],
    ["verify", "--n", "6"],
    ["verify", "--n", "2", "--checks", "nonsense"],
    ["eval-minor", "--rows", "1", "--cols", "1"],
    ["eval-minor", "--rows", "3", "--cols", "3", "--matrix", "1,2;3,4"],
    ["eval-minor", "--rows", "1,2", "--cols", "1", "--n", "3"],
    ["pds", "--n", "3", "--v", "321", "--word", "1"],
    ["verify", "--n", "3", "--word", "1,2,1"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().out.startswith("Error:")


def test_library_errors_exit_1(monkeypatch, capsys):
    def broken(d):
        raise ValueError("no seed for this diagram")

    monkeypatch.setattr(inspect_cmd, "build_ing_seed", broken)
    assert main(["seed", "--n", "3", "--word", "2,1,2"]) == 1
    assert capsys.readouterr().out == "Error: no seed for this diagram\n"


def test_argparse_errors():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["seed", "--n", "3", "--word", "2,1,2", "--construction", "other"])
