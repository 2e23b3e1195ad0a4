"""Command-line interface: outputs, formats, exit codes."""

import json

import pytest

from heckefact.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err.strip()


class TestCoeff:
    def test_paper_examples(self, capsys):
        code, out, _ = run(capsys, "coeff", "e[1,1]", "3")
        assert code == 0 and out == "q^-3 + q^-2 + q^-1"
        code, out, _ = run(capsys, "coeff", "h[2]", "3")
        assert code == 0 and out == "q^-3 + q^-1"
        code, out, _ = run(capsys, "coeff", "e[0]", "4")
        assert code == 0 and out == "0"

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "coeff", "e[1,1]", "3", "--format", "json")
        assert code == 0
        assert json.loads(out) == {"q": {"-3": "1", "-2": "1", "-1": "1"}}

    def test_rational_q(self, capsys):
        code, out, _ = run(capsys, "coeff", "e[1,1]", "3", "--q", "2")
        assert code == 0 and out == "7/8"

    def test_root_of_unity_warning(self, capsys):
        code, out, err = run(capsys, "coeff", "e[1,1]", "3", "--q", "-1")
        assert code == 0 and out == "-1"
        assert "root of unity" in err

    def test_q_zero_rejected(self, capsys):
        code, _, err = run(capsys, "coeff", "e[1,1]", "3", "--q", "0")
        assert code == 2

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "coeff", "x[2]", "3")
        assert code == 2 and "error" in err


class TestMq:
    def test_algorithms(self, capsys):
        code, out, _ = run(capsys, "mq", "3", "2,2", "alt")
        assert code == 0 and out == "q + 2*q^2 + 2*q^3 + q^4"
        code, out, _ = run(capsys, "mq", "3", "2,2", "stat")
        assert code == 0 and out == "q + 2*q^2 + 2*q^3 + q^4"
        code, out, _ = run(capsys, "mq", "4", "4", "bolan")
        assert code == 0 and out == "1"
        code, out, _ = run(capsys, "mq", "3", "2,2", "subspaces:2")
        assert code == 0 and out == "42"

    def test_bad_algo(self, capsys):
        code, _, _ = run(capsys, "mq", "3", "2,2", "magic")
        assert code == 2

    def test_guardrail(self, capsys):
        code, _, err = run(capsys, "mq", "5", "2,2", "subspaces:2")
        assert code == 3 and "guardrail" in err

    def test_table(self, capsys, tmp_path):
        out_file = tmp_path / "table.csv"
        code = main(["mq-table", "3", "2", str(out_file)])
        assert code == 0
        lines = out_file.read_text().strip().splitlines()
        assert lines[0] == "n,r,polynomial,value_at_1"
        rows = [line.split(",", 3) for line in lines[1:]]
        assert ["3", "2;2", '"q + 2*q^2 + 2*q^3 + q^4"', "6"] in \
            [r for r in rows] or \
            any(r[0] == "3" and r[1] == "2;2" and r[3] == "6" for r in rows)


class TestPsAndOracle:
    def test_ps(self, capsys):
        code, out, _ = run(capsys, "ps", "e[1]", "3")
        assert code == 0 and out == "1 + q + q^2"
        code, out, _ = run(capsys, "ps", "h[2]", "2")
        assert code == 0 and out == "1 + q + q^2"

    def test_oracle(self, capsys):
        code, out, _ = run(capsys, "oracle", "a", "4", "3")
        assert code == 0 and out == "16"
        code, out, _ = run(capsys, "oracle", "b", "4", "3")
        assert code == 0 and out == "5"
        code, out, _ = run(capsys, "oracle", "c", "4", "2,1")
        assert code == 0 and out == "6"

    def test_oracle_guardrail(self, capsys):
        code, _, _ = run(capsys, "oracle", "a", "9", "3")
        assert code == 3


class TestVerify:
    def test_bogus_profile(self, capsys):
        code, _, err = run(capsys, "verify", "bogus")
        assert code == 2 and "profile" in err

    def test_quick(self, capsys):
        code, out, _ = run(capsys, "verify", "quick")
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert lines and all(line["status"] == "pass" for line in lines)
        assert all(set(line) == {"check", "params", "status", "witness", "ms"}
                   for line in lines)
