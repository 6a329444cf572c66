import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from main import cli, run

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


@pytest.fixture
def runner():
    return CliRunner()


def invoke_json(runner, args):
    result = runner.invoke(cli, ["--json", *args])
    return result, json.loads(result.stdout)


def top_level_keys(text):
    return {line.split(":", 1)[0] for line in text.splitlines() if line and not line.startswith(" ")}


def test_braid_achiral(runner):
    result = runner.invoke(cli, ["braid-achiral", "--strands", "3", "--word", "1 2 -1 -2"])
    assert result.exit_code == 0
    assert "  conjugate: true" in result.stdout.splitlines()
    assert "  pure_witness:" in result.stdout


def test_braid_normalize(runner):
    result, data = invoke_json(runner, ["braid-normalize", "--strands", "3", "--word", "1 2 1"])
    assert result.exit_code == 0
    assert data["results"]["inf"] == 1
    assert data["results"]["canonical_length"] == 0


def test_braid_conjugate(runner):
    result, data = invoke_json(runner, ["braid-conjugate", "--strands", "3", "--word", "1 2", "--other", "2 1"])
    assert result.exit_code == 0
    assert data["results"]["conjugate"] is True
    result, data = invoke_json(runner, ["braid-conjugate", "--strands", "3", "--word", "1 2", "--other", "1 -2"])
    assert data["results"]["conjugate"] is False


def test_braid_from_file(runner, tmp_path):
    path = tmp_path / "trefoil.txt"
    path.write_text("strands: 2\n1 1 1\n")
    result, data = invoke_json(runner, ["inv-alexander", "--file", str(path)])
    assert result.exit_code == 0
    assert data["results"]["alexander"] == "t^-1 - 1 + t"


def test_braid_cable(runner):
    args = ["braid-cable", "--outer-strands", "2", "--outer", "1", "--inner-strands", "2", "--inner", "1"]
    result, data = invoke_json(runner, args)
    assert result.exit_code == 0
    assert data["results"] == {"strands": 4, "word": "2 3 1 2 1", "crossings": 5, "exponent_sum": 5, "cyclic": True}


def test_braid_cable_text(runner):
    args = ["braid-cable", "--outer-strands", "2", "--outer", "1", "--inner-strands", "2", "--inner", "1"]
    text = runner.invoke(cli, args).stdout
    lines = [line for line in text.splitlines() if not line.startswith("inputs_digest:")]
    assert lines == [
        "command: braid-cable",
        "inputs:",
        "  inner: 1",
        "  inner_strands: 2",
        "  outer: 1",
        "  outer_strands: 2",
        "results:",
        "  crossings: 5",
        "  cyclic: true",
        "  exponent_sum: 5",
        "  strands: 4",
        "  word: 2 3 1 2 1",
    ]
    assert text == runner.invoke(cli, args).stdout


def test_jones(runner):
    result, data = invoke_json(runner, ["inv-jones", "--strands", "2", "--word", "1 1 1"])
    assert result.exit_code == 0
    assert data["results"]["jones"] == "t + t^3 - t^4"
    assert data["results"]["components"] == 1


def test_jones_over_the_crossing_cap(runner):
    result, data = invoke_json(runner, ["inv-jones", "--strands", "2", "--word", "1 1 1", "--max-crossings", "2"])
    assert result.exit_code == 1
    assert data["limit"] == "crossings"
    assert "error" in data


def test_alexander_verdict(runner):
    args = ["inv-alexander", "--strands", "3", "--word", "1 2 -1 -2", "--verdict"]
    result, data = invoke_json(runner, args)
    assert result.exit_code == 0
    assert data["results"]["verdict"] == "Unknotted"


def test_alexander_rejects_links(runner):
    result = runner.invoke(cli, ["inv-alexander", "--strands", "2", "--word", "1 1"])
    assert result.exit_code == 1
    assert "error:" in result.stdout


@pytest.mark.parametrize(
    "args",
    [
        ["inv-jones", "--strands", "2", "--word", "1 x"],
        ["inv-jones", "--strands", "2", "--word", "3"],
        ["sol-smale", "--type", "1"],
        ["sol-construct", "--type", "3 five"],
    ],
)
def test_parse_errors(runner, args):
    assert runner.invoke(cli, args).exit_code == 2


def test_bad_spec_file(runner, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("cycle:\nstage: 2 1 1\n")
    result = runner.invoke(cli, ["sol-analyze", str(path)])
    assert result.exit_code == 2
    assert "line 2" in result.stdout


def test_missing_spec_file(runner, tmp_path):
    assert runner.invoke(cli, ["sol-analyze", str(tmp_path / "absent.txt")]).exit_code == 1


def test_text_and_json_carry_the_same_keys(runner):
    args = ["braid-normalize", "--strands", "3", "--word", "1 -2"]
    text = runner.invoke(cli, args).stdout
    _, data = invoke_json(runner, args)
    assert top_level_keys(text) == set(data)


def test_sol_analyze(runner):
    result, data = invoke_json(runner, ["sol-analyze", str(SAMPLES / "alternating_2adic.txt"), "--depth", "1"])
    assert result.exit_code == 0
    results = data["results"]
    assert results["type"] == {"prefix": [], "cycle": [2]}
    assert results["sign_sequence"] == {"prefix": [], "cycle": [1, -1]}
    assert results["achiral_2adic"] is True
    assert results["strict_achirality"] == "No"
    assert results["framing"] == "zero"
    assert results["knotting_aggregate"] == "Unknotted through depth 1"
    assert [row["level"] for row in results["knotting"]] == [0, 1]
    assert "framing_warning" not in results


@pytest.mark.parametrize("sample", ["alternating_2adic.txt", "right_handed_2adic.txt"])
def test_unknotted_samples_never_report_knotted(runner, sample):
    result, data = invoke_json(runner, ["sol-analyze", str(SAMPLES / sample)])
    assert result.exit_code == 0
    results = data["results"]
    assert results["knotting"]
    assert all(row["verdict"] != "Knotted" for row in results["knotting"])
    assert results["knotting_aggregate"] != "Knotted"
    assert "sign_sequence" in results


def test_blackboard_writhe_withholds_the_two_adic_code(runner, tmp_path):
    path = tmp_path / "blackboard.txt"
    path.write_text("ambient: unknot\ncycle:\nstage: 2 1\n")
    result, data = invoke_json(runner, ["sol-analyze", str(path), "--depth", "2"])
    assert result.exit_code == 0
    results = data["results"]
    assert results["framing"] == "blackboard"
    assert "framing: zero" in results["framing_warning"]
    assert "sign_sequence" not in results
    assert "achiral_2adic" not in results
    assert results["knotting_aggregate"] == "Knotted"


def test_sol_analyze_knotted_ambient(runner):
    result, data = invoke_json(runner, ["--depth", "0", "sol-analyze", str(SAMPLES / "figure_eight_triadic.txt")])
    assert result.exit_code == 0
    assert data["results"]["strict_achirality"] == "Yes"
    assert data["results"]["knotting_aggregate"] == "Knotted"
    assert "sign_sequence" not in data["results"]


def test_sol_equiv(runner):
    a, b = str(SAMPLES / "alternating_2adic.txt"), str(SAMPLES / "right_handed_2adic.txt")
    result, data = invoke_json(runner, ["sol-equiv", a, b, "--lk0", "1", "--depth", "1"])
    assert result.exit_code == 0
    results = data["results"]
    assert results["deletion_equivalent"] is True
    assert results["supernatural_equal"] is True
    assert results["signseq_equivalent"] is False
    assert results["algebraically_linked"] is True
    assert {"n": 1, "j": 1, "lk": 4} in results["linking_numbers"]


def test_sol_construct_writes_a_spec(runner, tmp_path):
    out = tmp_path / "achiral.txt"
    result, data = invoke_json(runner, ["sol-construct", "--type", "3", "--prefix", "2", "--out", str(out)])
    assert result.exit_code == 0
    assert data["results"]["strict_achirality"] == "Yes"
    assert data["results"]["stages"] == [{"part": "cycle", "strands": 3, "word": "1 2 -1 -2"}]
    result, data = invoke_json(runner, ["sol-analyze", str(out), "--depth", "1"])
    assert result.exit_code == 0
    assert data["results"]["strict_achirality"] == "Yes"


def test_sol_construct_even_tail(runner):
    assert runner.invoke(cli, ["sol-construct", "--type", "2"]).exit_code == 1


def test_sol_smale(runner):
    result, data = invoke_json(runner, ["sol-smale", "--type", "2"])
    assert result.exit_code == 0
    assert data["results"]["count"] == 2
    assert runner.invoke(cli, ["sol-smale", "--type", "4"]).exit_code == 1


def test_sol_invariants(runner):
    spec = str(SAMPLES / "right_handed_2adic.txt")
    result, data = invoke_json(runner, ["sol-invariants", spec, "--depth", "2", "--which", "writhe"])
    assert result.exit_code == 0
    assert data["results"]["series"] == ["0", "1", "3"]
    result, data = invoke_json(runner, ["sol-invariants", spec, "--depth", "3", "--which", "jones", "--max-crossings", "5"])
    assert result.exit_code == 0
    assert data["results"]["truncated"] is True
    assert data["results"]["truncated_at"] == 3


def test_draw_is_deterministic(runner, tmp_path):
    first, second = tmp_path / "a.svg", tmp_path / "b.svg"
    for out in (first, second):
        result = runner.invoke(cli, ["draw", "--strands", "3", "--word", "1 -2 1 -2", "--out", str(out)])
        assert result.exit_code == 0
    assert first.read_bytes() == second.read_bytes()


def test_run_returns_exit_codes(capsys):
    assert run(["sol-smale", "--type", "2 2"]) == 0
    assert run(["sol-smale", "--type", "4"]) == 1
    assert run(["inv-jones", "--strands", "2", "--word", "1 y"]) == 2
    assert run(["braid-normalize", "--word", "1"]) == 2
    assert "count: 3" in capsys.readouterr().out


@pytest.mark.parametrize("exc", [RuntimeError("witness failed verification"), ZeroDivisionError("division by zero")])
def test_internal_failures_exit_with_one(runner, monkeypatch, exc):
    def broken(t):
        raise exc

    monkeypatch.setattr("routers.solenoid_router.smale_enumerate", broken)
    result, data = invoke_json(runner, ["sol-smale", "--type", "2"])
    assert result.exit_code == 1
    assert type(exc).__name__ in data["error"]
    assert "limit" not in data
