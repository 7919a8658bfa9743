import json

import sympy

from genstirling import cli
from genstirling.polycore import ONE
from genstirling.report import IdentityReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_text(capsys):
    code, out, _ = run(capsys, "table", "--n", "3")
    assert code == 0
    assert out == "[1]\n[0, 1]\n[0, a + b, 1]\n[0, 2*a^2 + 3*a*b + b^2, 3*a + 3*b, 1]\n"


def test_table_trivial(capsys):
    assert run(capsys, "table", "--n", "0")[1] == "[1]\n"


def test_table_profile_csv(capsys):
    code, out, _ = run(capsys, "table", "--n", "4", "--profile", "lah", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,k,value"
    assert "4,2,36" in lines
    assert len(lines) == 1 + 15


def test_table_rational_point(capsys):
    code, out, _ = run(capsys, "table", "--n", "2", "--alpha", "1/2", "--beta", "1")
    assert code == 0
    assert out == "[1]\n[0, 1]\n[0, 3/2, 1]\n"


def test_table_is_deterministic(capsys):
    first = run(capsys, "table", "--n", "6", "--format", "json")[1]
    second = run(capsys, "table", "--n", "6", "--format", "json")[1]
    assert first == second
    assert json.loads(first)[2][1] == [{"a": 1, "b": 0, "x": 0, "c": "1"}, {"a": 0, "b": 1, "x": 0, "c": "1"}]


def test_value(capsys):
    assert run(capsys, "value", "--n", "4", "--k", "2", "--alpha", "0", "--beta", "1")[1] == "7\n"
    assert run(capsys, "value", "--n", "5", "--k", "5")[1] == "1\n"
    assert run(capsys, "value", "--n", "3", "--k", "1")[1] == "2*a^2 + 3*a*b + b^2\n"
    assert run(capsys, "value", "--n", "4", "--k", "2", "--profile", "lah")[1] == "36\n"


def test_value_with_zero_beta_uses_the_table(capsys, monkeypatch):
    def refuse(*args, **kwargs):
        raise AssertionError("explicit formula must not run for beta = 0")

    monkeypatch.setattr(cli, "explicit_value", refuse)
    code, out, _ = run(capsys, "value", "--n", "4", "--k", "2", "--alpha", "1", "--beta", "0")
    assert code == 0
    assert out == "11\n"


def test_value_factor(capsys):
    code, out, _ = run(capsys, "value", "--n", "3", "--k", "1", "--factor")
    assert code == 0
    a, b = sympy.symbols("a b")
    factored = sympy.sympify(out.strip())
    assert factored.is_Mul
    assert sympy.expand(factored - (a + b) * (2 * a + b)) == 0


def test_value_errors(capsys):
    code, _, err = run(capsys, "value", "--n", "3", "--k", "1", "--alpha", "1/0", "--beta", "1")
    assert code == 2
    assert "error" in err
    assert run(capsys, "value", "--n", "3", "--k", "4")[0] == 2
    assert run(capsys, "value", "--n", "3", "--k", "1", "--profile", "nope")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys, "table")[0] == 2
    assert run(capsys, "value", "--n", "3")[0] == 2
    assert run(capsys, "table", "--n", "3", "--alpha", "1")[0] == 2
    assert run(capsys, "table", "--n", "3", "--alpha", "1", "--beta", "1", "--profile", "lah")[0] == 2
    assert run(capsys, "export", "--n", "3", "--format", "csv")[0] == 2
    assert run(capsys, "table", "--n", "3", "--dump")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "check", "--identity", "thm99")[0] == 2


def test_limits(capsys, monkeypatch):
    monkeypatch.setenv("GENSTIRLING_MAX_POLY_N", "3")
    monkeypatch.setenv("GENSTIRLING_MAX_NUMERIC_N", "5")
    code, _, err = run(capsys, "table", "--n", "4")
    assert code == 2
    assert "limited" in err
    assert run(capsys, "table", "--n", "5", "--profile", "lah")[0] == 0
    assert run(capsys, "table", "--n", "6", "--profile", "lah")[0] == 2
    assert run(capsys, "check", "--max-n", "4")[0] == 2


def test_oracle(capsys):
    assert run(capsys, "oracle", "--n", "3", "--k", "1")[1] == "2*a^2 + 3*a*b + b^2\n"
    code, out, _ = run(capsys, "oracle", "--n", "3", "--k", "1", "--dump")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 6
    assert all("weight" in json.loads(line) for line in lines)
    assert run(capsys, "oracle", "--n", "4", "--k", "1", "--cap", "3")[0] == 2


def test_check_suite(capsys):
    code, out, err = run(capsys, "check", "--max-n", "4")
    assert code == 0
    reports = json.loads(out)
    assert reports
    assert all(r["pass"] for r in reports)
    assert "checks:" in err


def test_check_printed_variant_exits_zero(capsys):
    code, out, _ = run(capsys, "check", "--identity", "thm4-as-printed", "--max-n", "3")
    assert code == 0
    failures = [r for r in json.loads(out) if not r["pass"]]
    assert [2, 0] in [r["params"] for r in failures]
    assert all(r["expected_failure"] for r in failures)


def test_check_vacuous(capsys):
    assert run(capsys, "check", "--max-n", "0")[0] == 0


def test_check_threads_do_not_change_output(capsys):
    single = run(capsys, "check", "--max-n", "4", "--threads", "1")[1]
    several = run(capsys, "check", "--max-n", "4", "--threads", "3")[1]
    assert single == several


def test_check_failure_exits_one(capsys, monkeypatch):
    def fake_suite(ranges, table, threads=1, progress_callback=None):
        return [IdentityReport.from_residual("connection", (2,), ONE)]

    monkeypatch.setattr(cli, "run_suite", fake_suite)
    code, out, _ = run(capsys, "check", "--max-n", "2")
    assert code == 1
    assert json.loads(out)[0]["counterexample"] == [2]


def test_export(capsys, tmp_path):
    target = tmp_path / "out" / "lah.json"
    code, out, err = run(capsys, "export", "--n", "4", "--profile", "lah", "--format", "json", "--out", str(target))
    assert code == 0
    assert out == ""
    assert str(target) in err
    first = target.read_bytes()
    assert json.loads(first)[4][2] == "36"
    run(capsys, "export", "--n", "4", "--profile", "lah", "--format", "json", "--out", str(target))
    assert target.read_bytes() == first


def test_out_file_for_table(capsys, tmp_path):
    target = tmp_path / "table.csv"
    code, out, _ = run(capsys, "table", "--n", "2", "--format", "csv", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text(encoding="utf-8") == "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,a + b\n2,2,1\n"


def test_verbose_banner_goes_to_stderr(capsys):
    code, out, err = run(capsys, "value", "--n", "2", "--k", "1", "--verbose")
    assert code == 0
    assert out == "a + b\n"
    assert "genstirling" in err


def test_oracle_cap_comes_from_settings(capsys, monkeypatch):
    monkeypatch.setenv("GENSTIRLING_ORACLE_CAP", "2")
    code, _, err = run(capsys, "oracle", "--n", "3", "--k", "1")
    assert code == 2
    assert "cap" in err
    assert run(capsys, "oracle", "--n", "3", "--k", "1", "--cap", "3")[0] == 0
