"""Smoke tests for the python bindings and the CLI."""

import json
import os
import subprocess

import pytest

qchrom = pytest.importorskip("qchrom")


def test_combinatorics():
    assert qchrom.multinomial(6, [2, 2, 2]) == 90
    assert qchrom.multinomial(90, [30, 30, 30]) == int(
        "79607789567531236214574346454361782651136"
    )
    assert qchrom.krawtchouk(6, 2, 0) == 15
    assert qchrom.krawtchouk(6, 2, 3) == -3
    assert qchrom.type_of([1, 2, 0, 2, 1], 3) == (1, 2, 2)
    assert qchrom.enumerate_types(3, 3, canonical=True) == [
        (0, 0, 3),
        (0, 1, 2),
        (1, 1, 1),
    ]


def test_spectrum_of_the_balanced_ternary_graph():
    report = qchrom.full_spectrum(3, 6, [[2, 2, 2]])
    assert report["lambda_max"] == 90
    assert report["lambda_min"] == -18
    assert report["bound"] == 6
    assert report["certified"] is True
    total = sum(e["multiplicity"] for e in report["entries"])
    assert total == 3**6


def test_engine_matches_oracle():
    engine = qchrom.full_spectrum(3, 3, [[1, 1, 1]])
    oracle = qchrom.brute_spectrum(3, 3, [[1, 1, 1]])
    assert engine["entries"] == oracle["entries"]


def test_eigenvalue_and_coefficient_routes_agree():
    assert qchrom.eigenvalue_of_type(3, 6, [[2, 2, 2]], [1, 1, 4]) == -18
    assert qchrom.balanced_coefficient(2, [1, 1, 4]) == -6


def test_invalid_arguments_raise():
    with pytest.raises(ValueError):
        qchrom.multinomial(5, [2, 2])
    with pytest.raises(ValueError):
        qchrom.full_spectrum(3, 4, [[1, 1, 2]])  # not negation-closed


def test_designs_and_representations():
    paley = qchrom.paley_design(7)
    assert (paley["k"], paley["lambda"], paley["theta"]) == (3, 1, 4)
    assert paley["upper_bound"] == 8

    rep = qchrom.flat_representation(paley["n"], paley["blocks"])
    assert rep["dimension"] == 8
    assert rep["orthogonal"] is True

    row = qchrom.evaluate_flat_representation(
        paley["n"], paley["blocks"], [0] * 7
    )
    assert row == [1] * 8

    check = qchrom.verify_bibd(15, qchrom.hadamard_design(2)["blocks"])
    assert check["ok"] and check["k"] == 7 and check["lambda"] == 3


def test_macwilliams_biduality():
    coeffs = {(3, 0, 0): 1, (1, 1, 1): 2}
    dual = qchrom.macwilliams_transform(3, coeffs, 3)
    assert dual[(2, 1, 0)] == 1
    back = qchrom.macwilliams_transform(
        3, {k: int(v) for k, v in dual.items()}, 9
    )
    assert back == {(3, 0, 0): 1, (1, 1, 1): 2}


def test_extremal_verdict():
    verdict = qchrom.verify_extremal_claims(2, cross_check=True)
    assert verdict["pass"] is True
    assert verdict["lambda_second_largest_abs"] == "-18"


def test_certify_table2_rows():
    bundle = qchrom.certify_table2()
    by_claim = {row["claim"]: row for row in bundle["rows"]}
    paley7 = next(v for k, v in by_claim.items() if "paley q=7" in k)
    assert paley7["verdict"] == "certified-equal"
    assert paley7["lower"]["value"] == "8"
    assert paley7["upper"]["value"] == "8"


def test_natural_representation_negative_control():
    ok = qchrom.natural_rep_check(2, 4, [[2, 2]])
    assert ok["pass"] is True and ok["upper_bound"] == 4
    bad = qchrom.natural_rep_check(2, 6, [[4, 2]])
    assert bad["pass"] is False


CLI = os.environ.get("QCHROM_CLI")


@pytest.mark.skipif(CLI is None, reason="QCHROM_CLI not set")
class TestCli:
    def run(self, *args, expect=0):
        proc = subprocess.run(
            [CLI, *args], capture_output=True, text=True, timeout=300
        )
        assert proc.returncode == expect, proc.stderr + proc.stdout
        return proc.stdout

    def test_spectrum_bound(self):
        out = self.run("spectrum", "--p", "3", "--n", "6", "--gen", "2,2,2")
        assert "chi_q lower bound = 6" in out

    def test_usage_exit_code(self):
        self.run("spectrum", "--p", "3", expect=2)
        self.run("nonsense", expect=2)
        # invalid generator type (not negation-closed)
        self.run("spectrum", "--p", "3", "--n", "4", "--gen", "1,1,2", expect=2)

    def test_budget_exit_code(self):
        self.run(
            "oracle", "--p", "2", "--n", "14", "--gen", "12,2",
            "--budget", "100", expect=3,
        )

    def test_design_json_roundtrip(self, tmp_path):
        out_file = tmp_path / "paley11.json"
        self.run("design", "paley", "11", "--out", str(out_file))
        data = json.loads(out_file.read_text())
        assert data["n"] == 11
        assert data["params"]["k"] == 5
        assert len(data["blocks"]) == 11

    def test_verify_goal(self):
        out = self.run("verify", "goal", "--l-max", "3")
        assert "l=3: pass" in out

    def test_certify_table3_row(self):
        out = self.run("certify", "table3", "--n", "11")
        assert "certified-equal" in out
