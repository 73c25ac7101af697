import json

import pytest

from ghbasis.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_SIZE_LIMIT, EXIT_USAGE, main, run


def test_delta_text(capsys):
    status = main(["delta", "--partition", "1,1"])
    out = capsys.readouterr().out
    assert status == EXIT_OK
    assert out.splitlines()[0] == "x2 - x1"


def test_verify_dim_json(capsys):
    status = main(["hooks", "verify-dim", "--k", "1", "--l", "1", "--output", "json"])
    out = capsys.readouterr().out
    assert status == EXIT_OK
    payload = json.loads(out)
    assert payload["command"] == "hooks verify-dim"
    assert payload["checks"] == [
        {"name": "dim M_mu", "expected": 6, "actual": 6, "pass": True}]
    assert set(payload) == {"command", "params", "checks", "runtime_ms", "seed"}


def test_zerox_count(capsys):
    status = main(["zerox", "count", "--partition", "2,2", "--output", "json"])
    payload = json.loads(capsys.readouterr().out)
    assert status == EXIT_OK
    count_check = payload["checks"][0]
    assert count_check["expected"] == 6 and count_check["actual"] == 6


def test_hooks_enumerate_list(capsys):
    status = main(["hooks", "enumerate", "--k", "1", "--l", "1", "--list"])
    out = capsys.readouterr().out
    assert status == EXIT_OK
    drawings = [json.loads(line) for line in out.splitlines()
                if line.startswith("{")]
    assert len(drawings) == 6
    assert all(set(p) == {"kind", "size", "crosses"}
               for d in drawings for p in d["places"])


def test_normal_form_command(capsys):
    status = main(["ideal", "normal-form", "--k", "1", "--l", "1", "--op", "x3"])
    out = capsys.readouterr().out
    assert status == EXIT_OK
    assert "-1 * d[x1]" in out and "-1 * d[x2]" in out


def test_usage_error_exit_code(capsys):
    assert main(["hooks", "enumerate"]) == EXIT_USAGE  # missing --k/--l
    capsys.readouterr()
    assert main(["nonsense"]) == EXIT_USAGE
    capsys.readouterr()


def test_size_limit_exit_code(capsys):
    status = main(["hooks", "enumerate", "--k", "5", "--l", "5"])
    capsys.readouterr()
    assert status == EXIT_SIZE_LIMIT


def test_suite_smoke_passes_and_is_seed_stable(capsys):
    status = main(["suite", "--level", "smoke", "--seed", "7", "--output", "json"])
    first = capsys.readouterr().out
    assert status == EXIT_OK
    status = main(["suite", "--level", "smoke", "--seed", "7", "--output", "json"])
    second = capsys.readouterr().out
    assert status == EXIT_OK
    a = json.loads(first)
    b = json.loads(second)
    # runtime_ms is the one measured (hence non-deterministic) field
    a["runtime_ms"] = b["runtime_ms"] = 0
    assert json.dumps(a) == json.dumps(b)
    assert a["seed"] == 7


def test_run_returns_report_object():
    report, status = run(["zerox", "count", "--partition", "2,1"])
    assert status == EXIT_OK
    assert report.ok
    assert report.command == "zerox count"
    assert report.params["partition"] == "2,1"
