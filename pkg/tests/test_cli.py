"""Command-line interface: argument parsing, output formats and their
byte-level determinism, JSON round-trips, and the exit-status contract."""

import io
import json
from fractions import Fraction as F

import pytest

from qfock import cli, closedform as cf, fock, verify
from qfock.qseries import Param, Series, series_from_json, series_equal


def run(argv):
    out = io.StringIO()
    status = cli.main(argv, out=out)
    return status, out.getvalue()


class TestCorr:
    def test_oracle_one_point(self):
        status, text = run(["corr", "--algebra", "a", "--level", "-1",
                            "--lambda", "0", "--points", "2/3",
                            "--N", "6", "--mode", "oracle",
                            "--format", "json"])
        assert status == 0
        got = series_from_json(json.loads(text))
        want = fock.a_sector_trace(0, [Param(F(2, 3))], 6)
        assert series_equal(got, want)

    def test_assignment_mode(self):
        status, text = run(["corr", "--algebra", "c", "--level", "-1",
                            "--lambda", "1", "--points", "2/3",
                            "--N", "5", "--mode", "assignment",
                            "--format", "json"])
        assert status == 0
        got = series_from_json(json.loads(text))
        want = cf.c_sector_minus1(1, [Param(F(2, 3))], 5)
        assert series_equal(got, want)

    def test_unrealized_level_is_usage_error(self):
        status, _ = run(["corr", "--algebra", "a", "--level", "1/2",
                         "--N", "4"])
        assert status == 2

    def test_b_type_rejected(self):
        status, _ = run(["corr", "--algebra", "b", "--level", "-1",
                         "--N", "4"])
        assert status == 2


class TestQdim:
    def test_matches_library(self):
        status, text = run(["qdim", "--algebra", "d", "--level", "-2",
                            "--lambda", "1,0", "--N", "8",
                            "--format", "json"])
        assert status == 0
        got = series_from_json(json.loads(text))
        assert series_equal(got, cf.qdim_closed("d", "-2", (1, 0), 8))

    def test_half_integer_level_string(self):
        status, text = run(["qdim", "--algebra", "c", "--level", "3/2",
                            "--lambda", "1,0", "--N", "6",
                            "--form", "product", "--format", "json"])
        assert status == 0
        got = series_from_json(json.loads(text))
        assert series_equal(
            got, cf.qdim_closed("c", "3/2", (1, 0), 6, "product"))

    def test_bad_label_is_usage_error(self):
        status, _ = run(["qdim", "--algebra", "c", "--level", "-2",
                         "--lambda", "x,y", "--N", "4"])
        assert status == 2


class TestIdentity:
    def test_pass_gives_zero(self):
        status, text = run(["identity", "--name", "theta-triple-product"])
        assert status == 0
        assert "pass" in text

    def test_unknown_name_is_usage_error(self):
        status, _ = run(["identity", "--name", "no-such-check"])
        assert status == 2

    def test_json_format(self):
        status, text = run(["identity", "--name", "exponential-right",
                            "--format", "json"])
        assert status == 0
        doc = json.loads(text)
        assert doc["checks"][0]["name"] == "exponential-right"


class TestVerify:
    def test_filtered_run(self):
        status, text = run(["verify", "--filter", "lemma-222-i-*"])
        assert status == 0
        assert "5/5 checks passed" in text

    def test_empty_filter_match_is_usage_error(self):
        status, _ = run(["verify", "--filter", "no-such-*"])
        assert status == 2

    def test_failing_gate_check_exits_one(self, monkeypatch):
        spec = verify.CheckSpec(
            "synthetic-cli-fail", {}, 4, "gate",
            lambda: (Series.one(4), Series.zero(4)))
        monkeypatch.setattr(verify, "registry", lambda: [spec])
        status, text = run(["verify", "--filter", "synthetic-*"])
        assert status == 1
        assert "fail" in text

    def test_json_report_schema(self):
        status, text = run(["verify", "--filter", "zzz-k0-*",
                            "--format", "json"])
        assert status == 0
        doc = json.loads(text)
        assert {c["name"] for c in doc["checks"]} \
            == {"zzz-k0-n1", "zzz-k0-n2"}
        for c in doc["checks"]:
            assert set(c) == {"name", "status", "first_discrepancy", "ms"}


class TestDump:
    def test_theta_json(self):
        status, text = run(["dump", "theta", "t=2/3", "N=4"])
        assert status == 0
        doc = json.loads(text)
        assert doc["terms"][0] == {"c": "-5/6", "q": "0"}

    def test_f_bo_round_trip(self):
        status, text = run(["dump", "f_bo", "n=1", "t=2/3", "N=6"])
        assert status == 0
        got = series_from_json(json.loads(text))
        assert series_equal(got, cf.f_bo([Param(F(2, 3))], 6))

    def test_qhyper_preset(self):
        status, text = run(["dump", "qhyper", "upper=2/3,3/5", "lower=1:1",
                            "arg=1:1", "N=5"])
        assert status == 0
        assert json.loads(text)["terms"]

    def test_unknown_name(self):
        status, _ = run(["dump", "no-such-series"])
        assert status == 2

    def test_unused_parameter_rejected(self):
        status, _ = run(["dump", "theta", "t=2/3", "bogus=1"])
        assert status == 2


class TestDeterminismAndFormats:
    def test_byte_identical_reruns(self):
        argv = ["corr", "--algebra", "a", "--level", "-2",
                "--lambda", "1,0", "--points", "2/3", "3/5",
                "--N", "5", "--mode", "assignment", "--format", "json"]
        assert run(argv) == run(argv)

    def test_csv_columns_and_order(self):
        status, text = run(["qdim", "--algebra", "a", "--level", "-1",
                            "--lambda", "1", "--N", "5", "--format", "csv"])
        assert status == 0
        lines = text.strip().splitlines()
        assert lines[0] == "q_num,z,coeff_num,coeff_den"
        qcols = [int(line.split(",")[0]) for line in lines[1:]]
        assert qcols == sorted(qcols)
        want = cf.qdim_closed("a", "-1", (1,), 5)
        rows = {}
        for line in lines[1:]:
            q_num, _, num, den = line.split(",")
            rows[int(q_num)] = F(int(num), int(den))
        assert rows == {q2: c for (q2, _), c in want.terms.items()}

    def test_pretty_format(self):
        status, text = run(["dump", "pochhammer", "a=2/3:1", "N=3",
                            "--format", "pretty"])
        assert status == 0
        assert text.splitlines()[0].startswith("q^0")
