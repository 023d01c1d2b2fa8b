"""Command-line interface: exit codes, output forms, golden JSON envelopes."""

import contextlib
import io
import json
import pathlib
import subprocess
import sys

import pytest

from deadending.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "outcome_left_end.json": ["outcome", "{.|1}", "--json"],
    "equiv_half_vs_one.json": ["equiv", "1/2", "1", "--tests", "dead-ending:b2:k2", "--json"],
    "compare_closed_form.json": ["compare", "1/2", "3/4", "--closed-form", "--json"],
    "universe_day1.json": ["universe", "dead-ending:b1:k2", "--list", "--json"],
    "verify_star_squared.json": ["verify", "fact:star-squared", "--json"],
    "monoid_small.json": ["monoid", "--generators", "ints:-1..1", "--terms", "2",
                          "--tests", "dead-end-closure:b2:k2:t2", "--json"],
}


def run_cli(argv):
    buf = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, buf.getvalue(), err.getvalue()


def scrub(node):
    if isinstance(node, dict):
        return {k: (0 if k == "duration_ms" else scrub(v)) for k, v in node.items()}
    if isinstance(node, list):
        return [scrub(x) for x in node]
    return node


def test_outcome_text_and_exit():
    code, out, _ = run_cli(["outcome", "{.|1}"])
    assert code == 0 and out.strip() == "N-"
    code, out, _ = run_cli(["outcome", "0", "--normal"])
    assert code == 0 and out.strip() == "P+"


def test_lengths_text():
    code, out, _ = run_cli(["lengths", "-3/4"])
    assert code == 0 and out.strip() == "left=undefined right=2"


def test_classify_text():
    code, out, _ = run_cli(["classify", "3"])
    assert code == 0
    assert "dead-right-end=yes" in out and "birthday=3" in out


def test_equiv_exit_codes():
    code, out, _ = run_cli(["equiv", "{-1|1}", "0", "--tests", "dead-ending:b2:k2"])
    assert code == 0 and "indistinguishable up to dead-ending:b2:k2" in out
    code, out, _ = run_cli(["equiv", "1/2", "1", "--tests", "dead-ending:b2:k2"])
    assert code == 1 and "distinguished" in out


def test_compare_closed_form_exits():
    code, out, _ = run_cli(["compare", "1/2", "3/4", "--closed-form"])
    assert code == 1 and out.strip() == "incomparable"
    code, out, _ = run_cli(["compare", "1", "1/2", "--closed-form"])
    assert code == 0 and out.strip() == "greater"
    code, out, _ = run_cli(["compare", "-1", "0", "--closed-form", "integers"])
    assert code == 0 and out.strip() == "greater"
    code, out, _ = run_cli(["compare", "2", "1", "--closed-form", "integers"])
    assert code == 0 and out.strip() == "less"


def test_compare_tests_based():
    code, out, _ = run_cli(["compare", "0", "1", "--tests", "dead-ending:b2:k2"])
    assert code == 1 and "incomparable" in out
    code, out, _ = run_cli(["compare", "1", "1/2", "--tests", "dead-ending:b2:k2"])
    assert code == 0 and "geq consistent" in out
    code, _, err = run_cli(["compare", "1", "1/2"])
    assert code == 2 and "compare needs" in err


def test_universe_count_and_budget():
    code, out, _ = run_cli(["universe", "dead-ending:b2:k2"])
    assert code == 0 and "107 members" in out
    code, _, err = run_cli(["universe", "dead-ending:b3:k2"])
    assert code == 3 and "33385305" in err


def test_parse_error_is_usage_error():
    code, _, err = run_cli(["outcome", "3/6"])
    assert code == 2 and "power of two" in err
    code, _, err = run_cli(["outcome", "{0|"])
    assert code == 2


def test_bad_descriptor_is_usage_error():
    code, _, err = run_cli(["equiv", "0", "0", "--tests", "no-such:b1"])
    assert code == 2


def test_verify_single_claim():
    code, out, _ = run_cli(["verify", "lemma:dead-end-outcome"])
    assert code == 0
    assert "PASS lemma:dead-end-outcome" in out
    assert "1 pass, 0 refuted, 0 skipped" in out


def test_verify_unknown_claim():
    code, _, err = run_cli(["verify", "thm:unheard-of"])
    assert code == 2 and "unknown claim" in err


def test_verify_budget_zero_exits_3():
    code, out, _ = run_cli(["verify", "all", "--budget", "0"])
    assert code == 3
    assert "23 skipped" in out


def test_json_envelope_schema():
    for argv in GOLDEN_CASES.values():
        code, out, _ = run_cli(argv)
        data = json.loads(out)
        assert set(data) == {
            "command",
            "inputs",
            "result",
            "witnesses",
            "bounds",
            "duration_ms",
        }


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_files(name):
    argv = GOLDEN_CASES[name]
    code, out, _ = run_cli(argv)
    data = scrub(json.loads(out))
    data["_exit_code"] = code
    expected = json.loads((GOLDEN / name).read_text())
    assert data == expected


def test_cli_deterministic_across_processes():
    argv = [sys.executable, "-m", "deadending.cli", "equiv", "1/2", "1",
            "--tests", "dead-ending:b2:k2", "--json"]
    runs = [
        subprocess.run(argv, capture_output=True, text=True, check=False)
        for _ in range(2)
    ]
    assert runs[0].returncode == runs[1].returncode == 1
    first = scrub(json.loads(runs[0].stdout))
    second = scrub(json.loads(runs[1].stdout))
    assert first == second
