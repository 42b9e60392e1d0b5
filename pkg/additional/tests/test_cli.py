"""
Command-line surface: outputs, exit codes and output stability.
"""
import json

import pytest

from main import cli
from services import eulerian
from services.render_service import render_qsym

from conftest import LINE_PLUS_POINT, U23


# =========================
# hilb
# =========================


def test_hilb_uniform_latex(runner):
    result = runner.invoke(cli, ["hilb", "--family", "uniform", "-r", "3", "-n", "3", "--variant", "chow", "--out", "latex"])
    assert result.exit_code == 0
    assert result.stdout == "1+4t+t^2\n"


def test_hilb_quniform_latex(runner):
    result = runner.invoke(cli, ["hilb", "--family", "quniform", "-r", "3", "-n", "3", "--out", "latex"])
    assert result.exit_code == 0
    assert result.stdout == "1+(2+q+q^2)t+t^2\n"


def test_hilb_q_value(runner):
    result = runner.invoke(cli, ["hilb", "--family", "quniform", "-r", "2", "-n", "2", "--variant", "aug", "--q-value", "2", "--out", "latex"])
    assert result.stdout == "1+4t+t^2\n"


def test_hilb_file_json(runner, write_flats):
    result = runner.invoke(cli, ["hilb", "--family", "file", "--flats", write_flats(U23), "--variant", "aug"])
    assert result.exit_code == 0
    assert json.loads(result.stdout) == [
        {"t": 0, "q": [[0, "1"]]},
        {"t": 1, "q": [[0, "4"]]},
        {"t": 2, "q": [[0, "1"]]},
    ]


@pytest.mark.parametrize(
    "args",
    [
        ["hilb", "-n", "3"],
        ["hilb", "--family", "file"],
        ["hilb", "-r", "2", "-n", "3", "--flats", "x.json"],
        ["hilb", "-r", "2", "-n", "3", "--q-value", "2"],
        ["hilb", "-r", "2", "-n", "3", "--out", "xml"],
    ],
)
def test_hilb_usage_errors(runner, args):
    assert runner.invoke(cli, args).exit_code == 2


def test_hilb_precondition_is_usage_error(runner):
    result = runner.invoke(cli, ["hilb", "-r", "4", "-n", "3"])
    assert result.exit_code == 2
    assert result.stderr.startswith("[chowfy]")


def test_invalid_flats_file_exits_3(runner, write_flats):
    path = write_flats({"ground": 3, "flats": [[], [1], [1, 2, 3]]})
    result = runner.invoke(cli, ["hilb", "--family", "file", "--flats", path])
    assert result.exit_code == 3
    assert "F3" in result.stderr


def test_guard_exits_4(runner):
    result = runner.invoke(cli, ["--max-n-guard", "2", "hilb", "--family", "quniform", "-r", "2", "-n", "3"])
    assert result.exit_code == 4
    assert "guard" in result.stderr


def test_output_is_stable(runner):
    args = ["hilb", "--family", "quniform", "-r", "3", "-n", "4", "--out", "csv"]
    assert runner.invoke(cli, args).stdout == runner.invoke(cli, args).stdout


# =========================
# frob and eulerian
# =========================


def test_frob_full_rank_is_Q(runner):
    result = runner.invoke(cli, ["frob", "--variant", "chow", "-r", "3", "-n", "3", "--out", "latex"])
    assert result.exit_code == 0
    assert result.stdout == render_qsym(eulerian.Q(3), "latex") + "\n"


def test_frob_ps(runner):
    result = runner.invoke(cli, ["frob", "-r", "3", "-n", "3", "--ps", "--out", "latex"])
    assert result.stdout == "1+(2+q+q^2)t+t^2\n"


def test_frob_flags_are_exclusive(runner):
    assert runner.invoke(cli, ["frob", "-r", "3", "-n", "3", "--ps", "--at-minus-one"]).exit_code == 2


def test_eulerian_binomial_q(runner):
    result = runner.invoke(cli, ["eulerian", "--kind", "binomial", "-n", "2", "--q", "--out", "latex"])
    assert result.exit_code == 0
    assert result.stdout == "1+(2+q)t+t^2\n"


def test_eulerian_plain_and_qsym(runner):
    assert runner.invoke(cli, ["eulerian", "--kind", "eulerian", "-n", "3", "--out", "latex"]).stdout == "1+4t+t^2\n"
    assert runner.invoke(cli, ["eulerian", "--kind", "Q0", "-n", "2", "--out", "latex"]).stdout == "F_{\\emptyset,2}t\n"
    assert runner.invoke(cli, ["eulerian", "--kind", "Q", "-n", "2", "--q"]).exit_code == 2


# =========================
# cd
# =========================


def test_cd_single_method(runner):
    result = runner.invoke(cli, ["cd", "-r", "3", "-n", "3", "--method", "determinant", "--out", "latex"])
    assert result.exit_code == 0
    assert result.stdout == "-q-q^2\n"
    result = runner.invoke(cli, ["cd", "-r", "3", "-n", "3", "--method", "eval", "--normalized", "--out", "latex"])
    assert result.stdout == "q+q^2\n"


def test_cd_report(runner):
    result = runner.invoke(cli, ["cd", "-r", "2", "-n", "3", "--variant", "aug"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["agreement"] is True
    assert report["skipped"] == []
    assert {route["method"] for route in report["routes"]} == {"eval", "descents", "secant", "determinant"}


def test_cd_determinant_on_vanishing_parity(runner):
    result = runner.invoke(cli, ["cd", "-r", "2", "-n", "3", "--method", "determinant"])
    assert result.exit_code == 2
    assert result.stderr.startswith("[charney]")


def test_cd_report_rejects_latex(runner):
    assert runner.invoke(cli, ["cd", "-r", "3", "-n", "3", "--out", "latex"]).exit_code == 2


# =========================
# matroid
# =========================


def test_matroid_json(runner, write_flats):
    result = runner.invoke(cli, ["matroid", "--flats", write_flats(U23), "--variant", "aug", "--aut", "(1 2)"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["rank"] == 2
    assert report["cd"] == 2
    assert report["flats_by_rank"] == {"0": 1, "1": 3, "2": 1}
    assert report["characters"] == [{"g": "(1 2)", "fixed_side": 0, "beta_side": 0}]


def test_matroid_text(runner, write_flats):
    result = runner.invoke(
        cli, ["matroid", "--flats", write_flats(LINE_PLUS_POINT), "--aut", "(1 2 3)", "--out", "text"]
    )
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert "rank: 3" in lines
    assert "hilbert: 1+5t+t^2" in lines
    assert "cd: 3" in lines
    assert "flag h: {}:1 {1}:3 {2}:3 {1,2}:2" in lines
    assert lines[-1].startswith("character (1 2 3):")


def test_matroid_rejects_non_automorphism(runner, write_flats):
    result = runner.invoke(cli, ["matroid", "--flats", write_flats(LINE_PLUS_POINT), "--aut", "(1 4)"])
    assert result.exit_code == 2
    assert result.stderr.startswith("[rankselect]")


def test_matroid_requires_flats(runner):
    assert runner.invoke(cli, ["matroid"]).exit_code == 2


# =========================
# verify
# =========================


def test_verify_unknown_suite(runner):
    assert runner.invoke(cli, ["verify", "--suite", "bogus"]).exit_code == 2


def test_verify_cd_suite(runner):
    result = runner.invoke(cli, ["verify", "--suite", "cd", "--max-n", "4"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["passed"] is True
    assert report["suite"] == "cd"
    assert [c["name"] for c in report["checks"]] == sorted(c["name"] for c in report["checks"])
