import io
import json
from contextlib import redirect_stderr, redirect_stdout

import jsonschema
import pytest

from symcont.cli import main

from conftest import run_cli


@pytest.fixture
def prime_spec(tmp_path):
    spec = {
        "domain": {"type": "OddPrimeReciprocals", "maxPrime": 100, "withZero": True},
        "function": {
            "type": "Piecewise",
            "pieces": [
                {
                    "region": {
                        "type": "OddPrimeReciprocals",
                        "maxPrime": 100,
                        "withZero": False,
                    },
                    "formula": {"formula": "Const", "c": 1},
                },
                {
                    "region": {"type": "FinitePoints", "points": [0]},
                    "formula": {"formula": "Const", "c": 0},
                },
            ],
        },
        "config": {"gridExponent": 6, "enumLimit": 10000},
    }
    path = tmp_path / "primes.json"
    path.write_text(json.dumps(spec))
    return str(path)


@pytest.fixture
def window_spec(tmp_path):
    spec = {
        "domain": {"type": "IntegerWindow", "lo": -5, "hi": 5},
        "function": {"formula": "Identity"},
    }
    path = tmp_path / "window.json"
    path.write_text(json.dumps(spec))
    return str(path)


def run_main(*args):
    """In-process invocation capturing both streams."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(args))
    return code, out.getvalue(), err.getvalue()


class TestAnalyze:
    def test_text_report(self, prime_spec):
        proc = run_cli("analyze", prime_spec)
        assert proc.returncode == 0
        assert "USC" in proc.stdout and "domain:" in proc.stdout
        assert "proven" in proc.stdout and "refuted" in proc.stdout
        assert "elapsed" in proc.stderr
        assert "elapsed" not in proc.stdout

    def test_json_report_matches_schema(self, prime_spec, report_schema):
        proc = run_cli("analyze", prime_spec, "--format", "json")
        assert proc.returncode == 0
        data = json.loads(proc.stdout)
        jsonschema.validate(data, report_schema)
        assert data["command"] == "analyze"
        assert set(data["verdicts"]) == {"C", "UC", "SC", "USC"}
        assert data["verdicts"]["USC"]["status"] == "proven"
        assert data["verdicts"]["C"]["status"] == "refuted"

    def test_verify_witness_flag(self, prime_spec):
        code, out, _ = run_main(
            "analyze", prime_spec, "--verify-witness", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert set(data["witness_checks"]) >= {"C", "UC", "SC", "USC"}
        assert all(v == [] for v in data["witness_checks"].values())

    def test_missing_file(self):
        code, _, err = run_main("analyze", "/nonexistent/path.json")
        assert code == 2
        assert "cannot read" in err

    def test_bad_spec(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{")
        code, _, err = run_main("analyze", str(bad))
        assert code == 2
        assert "syntax error" in err

    def test_flag_overrides_config(self, window_spec):
        code, out, _ = run_main(
            "analyze",
            window_spec,
            "--format",
            "json",
            "--delta-schedule",
            "1/2,1/4",
            "--max-pairs",
            "123",
        )
        assert code == 0
        data = json.loads(out)
        assert data["config"]["delta_schedule"] == ["1/2", "1/4"]
        assert data["config"]["max_pairs"] == 123


class TestZoo:
    def test_single_example_json(self, report_schema):
        code, out, _ = run_main(
            "zoo", "--example", "ex-3.6", "--format", "json", "--enum-limit", "10000"
        )
        assert code == 0
        data = json.loads(out)
        jsonschema.validate(data, report_schema)
        assert data["ok"] is True
        assert data["relations"] == []
        assert data["cases"][0]["example"] == "ex-3.6"

    def test_single_example_text(self):
        code, out, _ = run_main("zoo", "--example", "ex-3.6")
        assert code == 0
        assert "ex-3.6" in out

    def test_unknown_example(self):
        code, _, err = run_main("zoo", "--example", "ex-0.0")
        assert code == 2
        assert "unknown example id" in err
        assert "ex-2.4" in err

    def test_needs_selection(self):
        code, _, err = run_main("zoo")
        assert code == 2
        assert "--all or --example" in err

    def test_byte_determinism(self):
        a = run_cli("zoo", "--example", "ex-3.6", "--format", "json")
        b = run_cli("zoo", "--example", "ex-3.6", "--format", "json")
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout

    def test_mismatch_exits_one(self, monkeypatch):
        import symcont.cli as cli_mod
        import symcont.zoo as zoo_mod

        real_run_example = zoo_mod.run_example

        def tampered(example_id, config=None, budget=None):
            reports = real_run_example(example_id, config, budget)
            reports[0].mismatches.append("forced for the exit-code test")
            return reports

        monkeypatch.setattr(cli_mod, "run_example", tampered)
        code, out, _ = run_main("zoo", "--example", "ex-3.6", "--format", "json")
        assert code == 1
        assert json.loads(out)["ok"] is False


class TestModuli:
    def test_uc_table(self, prime_spec):
        code, out, _ = run_main("moduli", prime_spec, "--notion", "uc")
        assert code == 0
        assert "delta" in out and "omega" in out

    def test_usc_json(self, prime_spec, report_schema):
        code, out, _ = run_main("moduli", prime_spec, "--notion", "usc", "--format", "json")
        assert code == 0
        data = json.loads(out)
        jsonschema.validate(data, report_schema)
        assert data["command"] == "moduli"
        assert data["profile"]["notion"] == "usc"
        assert len(data["profile"]["rows"]) == 21

    def test_notion_required(self, prime_spec):
        code, _, _ = run_main("moduli", prime_spec)
        assert code == 2


class TestUsage:
    def test_no_command(self):
        code, _, _ = run_main()
        assert code == 2

    def test_help_exits_zero(self):
        code, _, _ = run_main("--help")
        assert code == 0

    def test_bad_format_value(self, window_spec):
        code, _, _ = run_main("analyze", window_spec, "--format", "xml")
        assert code == 2
