"""CLI contract: subcommands, exit codes, config handling, determinism."""

import json

import pytest
from click.testing import CliRunner

import podles.operations as operations
from podles.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


class TestEval:
    def test_eval(self, runner):
        res = runner.invoke(main, ["eval", "hodge(e+)"])
        assert res.exit_code == 0
        assert res.output.strip() == "i*e+"

    def test_eval_rewrites(self, runner):
        res = runner.invoke(main, ["eval", "q*a*b - b*a"])
        assert res.exit_code == 0
        assert "a*b" in res.output

    def test_parse_error_exit_2(self, runner):
        res = runner.invoke(main, ["eval", "q*("])
        assert res.exit_code == 2
        assert "column" in res.output

    def test_unknown_suite_exit_2(self, runner):
        res = runner.invoke(main, ["verify", "nonsense"])
        assert res.exit_code == 2


class TestVerify:
    def test_sl2_passes(self, runner):
        res = runner.invoke(main, ["verify", "sl2", "--max-level", "2"])
        assert res.exit_code == 0
        report = json.loads(res.output)
        assert report["failed"] == 0
        assert report["suite"] == "sl2"

    def test_violation_exit_1(self, runner, monkeypatch):
        def broken(*args, **kwargs):
            return {"suite": "sl2", "max_level": 1, "mode": "symbolic",
                    "s0": None, "results": [
                        {"check": "x", "block": 0, "sector": "", "mode":
                         "symbolic", "status": "fail",
                         "counterexample": "forced"}],
                    "passed": 0, "failed": 1, "calibration": {}}

        monkeypatch.setattr(operations, "run_verify", broken)
        res = runner.invoke(main, ["verify", "sl2"])
        assert res.exit_code == 1

    def test_numeric_flag(self, runner):
        res = runner.invoke(main, ["verify", "sl2", "--max-level", "1",
                                   "--numeric", "1/2"])
        assert res.exit_code == 0
        report = json.loads(res.output)
        assert report["mode"] == "numeric"
        assert report["s0"] == "1/2"

    def test_determinism(self, runner):
        r1 = runner.invoke(main, ["verify", "calculus", "--max-level", "2"])
        r2 = runner.invoke(main, ["verify", "calculus", "--max-level", "2"])
        assert r1.output == r2.output


class TestCohomology:
    def test_totals(self, runner):
        res = runner.invoke(main, ["cohomology", "--max-level", "2"])
        assert res.exit_code == 0
        table = json.loads(res.output)
        assert table["H0"] == 1 and table["H1"] == 0 and table["H2"] == 1
        assert table["refinement"] == "ok"


class TestMatrix:
    def test_csv(self, runner):
        res = runner.invoke(main, ["matrix", "--op", "L", "--level", "2",
                                   "--sector", "omega0", "--format", "csv"])
        assert res.exit_code == 0
        lines = res.output.strip().splitlines()
        assert lines[0] == "row,col,value"

    def test_json(self, runner):
        res = runner.invoke(main, ["matrix", "--op", "Delta_d", "--level", "0"])
        assert res.exit_code == 0
        body = json.loads(res.output)
        assert body["shape"] == [2, 2]


class TestCalibrate:
    def test_report(self, runner):
        res = runner.invoke(main, ["calibrate"])
        assert res.exit_code == 0
        body = json.loads(res.output)
        assert body["constants"]["star_beta"] == "-q"


class TestConfig:
    def test_config_defaults(self, runner, tmp_path):
        cfg = tmp_path / "podles.conf"
        cfg.write_text("# defaults\nmax_level = 1\n")
        res = runner.invoke(main, ["--config", str(cfg), "verify", "sl2"])
        assert res.exit_code == 0
        assert json.loads(res.output)["max_level"] == 1

    def test_flag_overrides_config(self, runner, tmp_path):
        cfg = tmp_path / "podles.conf"
        cfg.write_text("max_level = 4\n")
        res = runner.invoke(main, ["--config", str(cfg), "verify", "sl2",
                                   "--max-level", "0"])
        assert res.exit_code == 0
        assert json.loads(res.output)["max_level"] == 0

    def test_bad_config(self, runner, tmp_path):
        cfg = tmp_path / "podles.conf"
        cfg.write_text("just nonsense\n")
        res = runner.invoke(main, ["--config", str(cfg), "calibrate"])
        assert res.exit_code != 0
