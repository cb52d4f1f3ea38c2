"""Command-line entry point: exit codes and stdout payloads."""

import json

import pytest

from src.main import run


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_evolve_ascii(capsys):
    assert run(["evolve", "--state", "11100000", "--steps", "2", "--format", "ascii"]) == 0
    assert capsys.readouterr().out.split() == ["11100000", "00011100", "10000011"]


def test_evolve_json(capsys):
    assert run(["evolve", "--state", "11100000", "--steps", "2"]) == 0
    body = _json(capsys)
    assert body["steps"] == 2
    assert body["blocks"] == "Q=3;W=5;offset=6"


def test_young_ascii_draws_rows(capsys):
    assert run(["young", "--state", "Q=3,1;W=5,6", "--format", "ascii"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[:2] == ["###", "#"]


def test_cycle_on_symmetric_state(capsys):
    assert run(["cycle", "--state", "1000010000"]) == 0
    body = _json(capsys)
    assert body["internal_symmetry"] is True
    assert body["f_formula"] is None
    assert (body["f"], body["r"]) == (5, 1)


def test_spectrum_uses_first_eps(capsys):
    assert run(["spectrum", "--state", "Q=3,1;W=5,6", "--eps", "0.1,0.05"]) == 0
    body = _json(capsys)
    assert body["eps"] == 0.1
    assert body["valuations"]["predicted"] == [3, 1]


def test_verify_quick_suite(capsys):
    assert run(["verify", "--suite", "combinatorics", "--quick", "--seed", "7"]) == 0
    report = _json(capsys)
    assert report["passed"] is True
    assert report["seed"] == 7
    assert all(check["cases"] > 0 for check in report["checks"])


@pytest.mark.parametrize(
    "argv",
    [
        ["evolve"],
        ["verify"],
        ["evolve", "--state", "1100000", "--eps", "0.1,0.2"],
        ["spectrum", "--state", "1100000", "--prec", "32"],
        ["nonsense"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(argv) == 2


def test_degenerate_state_exits_1(capsys):
    assert run(["young", "--state", "1111"]) == 1
    body = _json(capsys)
    assert body["error"] == "DegenerateStateError"


def test_help_lists_configuration(capsys):
    assert run(["--help"]) == 0
    out = capsys.readouterr().out
    assert "PBBS_EPS" in out
    assert "Configuration loaded" in out
