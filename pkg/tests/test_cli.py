"""Command-line interface: golden outputs, exit codes, determinism."""

import json
import re

import pytest

from hessllt.cli import main
from hessllt.hessgraph import HessenbergFunction, IdentityCheck, llt

TIMING = re.compile(r'"timing_seconds": [-+0-9.eE]+')


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


class TestExpansionCommands:
    def test_llt_json_golden(self, capsys):
        code, obj, _ = run_json(capsys, "llt", "--h", "2,2", "--basis", "e")
        assert code == 0
        obj.pop("timing_seconds")
        assert obj == {
            "command": "llt",
            "inputs": {"h": [2, 2], "basis": "e"},
            "result": {
                "basis": "e",
                "n": 2,
                "terms": [
                    {"partition": [2], "coeff": "(q - 1)/(1)"},
                    {"partition": [1, 1], "coeff": "(1)/(1)"},
                ],
            },
        }

    def test_csf_plain_golden(self, capsys):
        code, out, _ = run(capsys, "csf", "--h", "2,2", "--basis", "e", "--format", "plain")
        assert code == 0
        assert out == "e_2: q + 1\n"

    def test_csf_latex_golden(self, capsys):
        code, out, _ = run(capsys, "csf", "--h", "3,3,3", "--basis", "e", "--format", "latex")
        assert code == 0
        assert out == "(q^3 + 2*q^2 + 2*q + 1)e_{3}\n"

    def test_llt_power_sum_basis(self, capsys):
        code, obj, _ = run_json(capsys, "llt", "--h", "1,2", "--basis", "p")
        assert code == 0
        assert obj["result"]["terms"] == [
            {"partition": [1, 1], "coeff": "(1)/(1)"}
        ]

    def test_llt_matches_library(self, capsys):
        code, obj, _ = run_json(capsys, "llt", "--h", "2,3,3", "--basis", "s")
        assert code == 0
        expected = llt(HessenbergFunction.parse("2,3,3")).in_basis("s").to_json_obj()
        assert obj["result"] == expected

    def test_llt_shifted_verdict(self, capsys):
        code, obj, _ = run_json(
            capsys, "llt", "--h", "2,3,3", "--basis", "e", "--shifted"
        )
        assert code == 0
        assert obj["verdict"] == "pass"
        assert obj["e_positive"] is True
        assert obj["passed"] is True
        assert obj["shifted_e_expansion"]["terms"] == [
            {"partition": [3], "coeff": "(q^2)/(1)"},
            {"partition": [2, 1], "coeff": "(2*q)/(1)"},
            {"partition": [1, 1, 1], "coeff": "(1)/(1)"},
        ]
        assert obj["orientation_expansion"] == obj["shifted_e_expansion"]


class TestVerifyCommand:
    def test_identities_single_h(self, capsys):
        code, obj, _ = run_json(capsys, "verify", "--scope", "identities", "--h", "2,2")
        assert code == 0
        assert obj["passed"] is True
        assert len(obj["checks"]) == 7
        assert all(c["passed"] for c in obj["checks"])

    def test_identities_plain_lines(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--scope", "identities", "--h", "2,2", "--format", "plain"
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 8  # 7 checks + summary
        assert all(line.startswith("PASS ") for line in lines[:-1])
        assert lines[-1] == "all passed: 7/7"

    def test_gkm_scope(self, capsys):
        code, obj, _ = run_json(capsys, "verify", "--scope", "gkm", "--h", "2,3,3")
        assert code == 0
        assert obj["passed"] is True
        assert len(obj["checks"]) == 7

    def test_complete_graph_scope(self, capsys):
        code, obj, _ = run_json(capsys, "verify", "--scope", "complete-graph", "--n", "2")
        assert code == 0
        assert obj["passed"] is True
        names = [c["name"] for c in obj["checks"]]
        assert "n=2: complete-graph partition 2" in names
        assert "n=2: complete-graph totals" in names

    def test_permutohedron_scope(self, capsys):
        code, obj, _ = run_json(capsys, "verify", "--scope", "permutohedron", "--n", "3")
        assert code == 0
        assert obj["passed"] is True

    def test_failure_exits_one(self, capsys, monkeypatch):
        monkeypatch.setattr(
            "hessllt.cli.verify_identities",
            lambda h: [IdentityCheck("synthetic", False, "forced failure")],
        )
        code, obj, _ = run_json(capsys, "verify", "--scope", "identities", "--h", "2,2")
        assert code == 1
        assert obj["passed"] is False


class TestExitCodes:
    def test_invalid_h_not_monotone(self, capsys):
        code, out, err = run(capsys, "llt", "--h", "2,1")
        assert code == 2
        assert "usage error" in err

    def test_invalid_h_below_index(self, capsys):
        code, _, err = run(capsys, "llt", "--h", "0,2")
        assert code == 2

    def test_missing_h(self, capsys):
        code, _, err = run(capsys, "llt")
        assert code == 2

    def test_verify_needs_h_or_n(self, capsys):
        code, _, err = run(capsys, "verify", "--scope", "identities")
        assert code == 2

    def test_verify_rejects_both_h_and_n(self, capsys):
        code, _, err = run(capsys, "verify", "--scope", "identities", "--h", "2,2", "--n", "3")
        assert code == 2

    def test_verify_rejects_latex(self, capsys):
        code, _, err = run(capsys, "verify", "--scope", "identities", "--h", "2,2", "--format", "latex")
        assert code == 2

    def test_budget_exit_three(self, capsys):
        code, _, err = run(capsys, "llt", "--h", "3,4,5,6,7,8,8,8")
        assert code == 3
        assert "budget" in err

    def test_gkm_budget_exit_three(self, capsys):
        code, _, err = run(capsys, "verify", "--scope", "gkm", "--h", "2,3,4,5,5")
        assert code == 3

    def test_bad_flag_is_argparse_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["llt", "--h", "2,2", "--basis", "z"])
        assert exc.value.code == 2


class TestDeterminism:
    def test_expansion_bytes_stable(self, capsys):
        _, out1, _ = run(capsys, "llt", "--h", "2,3,3", "--basis", "e", "--shifted")
        _, out2, _ = run(capsys, "llt", "--h", "2,3,3", "--basis", "e", "--shifted")
        assert TIMING.sub("T", out1) == TIMING.sub("T", out2)

    def test_verify_bytes_stable(self, capsys):
        args = ("verify", "--scope", "identities", "--n", "3")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert TIMING.sub("T", out1) == TIMING.sub("T", out2)
