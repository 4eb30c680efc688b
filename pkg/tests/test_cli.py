import json

import pytest
from click.testing import CliRunner

from arlab.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, args, expect_exit=0):
    result = runner.invoke(main, args, catch_exceptions=False)
    assert result.exit_code == expect_exit, result.output
    return result


class TestSearchCommands:
    def test_g_example(self, runner, tmp_path):
        res = invoke(runner, ["g", "--n", "5", "--target", "K4",
                              "--family", "up:K3", "--cache-dir", str(tmp_path)])
        payload = json.loads(res.output)
        assert payload["value"] == 5 and payload["status"] == "exact"
        assert payload["schema"] == 1
        assert payload["family"]["contains_k2"] is False

    def test_ex_example(self, runner, tmp_path):
        res = invoke(runner, ["ex", "--n", "6", "--forbid", "K4",
                              "--cache-dir", str(tmp_path)])
        payload = json.loads(res.output)
        assert payload["value"] == 12
        assert payload["certificate"]["type"] == "graph"

    def test_n_range_and_table(self, runner, tmp_path):
        res = invoke(runner, ["ar", "--n", "4-5", "--target", "K3",
                              "--format", "table", "--cache-dir", str(tmp_path)])
        lines = res.output.strip().splitlines()
        assert len(lines) == 4  # header, rule, two rows
        assert lines[2].split()[:3] == ["ar", "4", "K3"]

    def test_cache_round_trip_identical_modulo_stats(self, runner, tmp_path):
        args = ["g", "--n", "4", "--target", "K4", "--family", "up:K3",
                "--cache-dir", str(tmp_path)]
        first = json.loads(invoke(runner, args).output)
        second = json.loads(invoke(runner, args).output)
        assert first["stats"]["cached"] is False
        assert second["stats"]["cached"] is True
        first.pop("stats"), second.pop("stats")
        assert first == second

    def test_no_cache_flag(self, runner, tmp_path):
        args = ["g", "--n", "4", "--target", "K4", "--family", "up:K3",
                "--cache-dir", str(tmp_path), "--no-cache"]
        invoke(runner, args)
        assert not list(tmp_path.rglob("*.json"))

    def test_family_contract_validation(self, runner):
        result = runner.invoke(
            main, ["g", "--n", "4", "--target", "K4", "--family", "free:K3"])
        assert result.exit_code != 0
        err = json.loads(result.stderr)
        assert err["error"]["code"] == "family-contract"

    def test_parse_error_object(self, runner):
        result = runner.invoke(
            main, ["g", "--n", "4", "--target", "Q7", "--family", "up:K3"])
        assert result.exit_code != 0
        err = json.loads(result.stderr)
        assert err["error"]["code"] == "graph-parse-error"


class TestVerifyCommand:
    def test_square_family_pattern(self, runner):
        res = invoke(runner, ["verify", "--pattern", "RTDL", "--n", "8",
                              "--m", "2", "--mode", "f_bad", "--target", "K5",
                              "--family", "edges:squares"])
        payload = json.loads(res.output)
        assert payload["ok"] is True and payload["colors"] == 22

    def test_failing_pattern_exits_nonzero(self, runner):
        result = runner.invoke(main, ["verify", "--pattern", "RAINBOW",
                                      "--n", "5", "--mode", "g_valid",
                                      "--target", "K4", "--family", "up:P3"])
        assert result.exit_code == 1
        payload = json.loads(result.output)
        assert payload["ok"] is False and payload["violation"] is not None


class TestPackingCommands:
    def test_pack(self, runner):
        res = invoke(runner, ["pack", "--g1", "M2", "--g2", "K1+K3", "--p", "4"])
        payload = json.loads(res.output)
        assert payload["packs"] is False

    def test_overlap(self, runner):
        res = invoke(runner, ["overlap", "--h", "C4", "--g", "K3", "--p", "4"])
        payload = json.loads(res.output)
        assert payload["min_overlap"] == 2
        assert payload["is_blocker"] is True

    def test_blockers(self, runner):
        res = invoke(runner, ["blockers", "--kind", "blocker", "--target", "K3",
                              "--p", "4", "--max-edges", "4"])
        payload = json.loads(res.output)
        assert payload["complete"] is True
        assert len(payload["graphs"]) == 1
        assert payload["graphs"][0]["n"] == 4  # the 4-cycle

    def test_size_validation(self, runner):
        result = runner.invoke(
            main, ["pack", "--g1", "K5", "--g2", "K2", "--p", "4"])
        assert result.exit_code != 0


class TestJobs:
    def test_parallel_matches_serial(self, runner, tmp_path):
        base = ["g", "--n", "4-5", "--target", "K4", "--family", "up:K3",
                "--no-cache"]
        serial = json.loads(invoke(runner, base + ["--jobs", "1"]).output)
        parallel = json.loads(invoke(runner, base + ["--jobs", "2"]).output)
        strip = lambda ps: [{k: v for k, v in p.items() if k != "stats"}
                            for p in ps]
        assert strip(serial) == strip(parallel)
