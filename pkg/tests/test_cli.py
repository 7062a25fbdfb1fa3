"""
Tests for the command-line interface
"""
import json
from unittest.mock import patch

import pytest

from config.settings import APP_VERSION
from src.cli.main import EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, main, parse_config
from src.ranking.divisor_sums import mobius


def _flipped_mobius(n):
    return -mobius(n) if n == 1 else mobius(n)


class TestConfig:
    """Test argument parsing into CliConfig"""

    def test_rank_defaults(self):
        config = parse_config(["rank", "0011"])
        assert config.subcommand == "rank"
        assert config.selector == "unlabelled"
        assert config.canonicalize
        assert config.output == "text"

    def test_bench_lengths(self):
        assert parse_config(["bench", "--lengths", "4,6"]).lengths == [4, 6]
        assert parse_config(["bench"]).lengths == [8, 12, 16]

    def test_version(self, capsys):
        assert main(["--version"]) == EXIT_OK
        assert APP_VERSION in capsys.readouterr().out


class TestRank:
    """Test the rank subcommand"""

    def test_rank_json(self, capsys):
        assert main(["--json", "rank", "0011"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["word"] == "0011"
        assert payload["length"] == 4
        assert payload["set"] == "unlabelled"
        assert payload["rank_total"] == "2"
        assert payload["rank_necklace"] == "2"
        assert payload["rank_symmetric"] == "0"
        assert payload["rank_enclosing"] == "2"
        assert payload["rank_asymmetric"] == "0"

    def test_rank_canonicalizes(self, capsys):
        assert main(["--json", "rank", "1110"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["word"] == "0001"
        assert payload["rank_total"] == "1"

    def test_rank_canonicalization_noted_in_text(self, capsys):
        assert main(["rank", "1110"]) == EXIT_OK
        assert "canonicalized 1110 -> 0001" in capsys.readouterr().out

    def test_rank_strict_rejects_non_canonical(self):
        assert main(["rank", "1110", "--no-canonicalize"]) == EXIT_INVALID

    def test_rank_selector(self, capsys):
        assert main(["rank", "0101", "--set", "symmetric"]) == EXIT_OK
        assert "symmetric rank: 1" in capsys.readouterr().out

    def test_rank_lyndon(self, capsys):
        assert main(["--json", "rank", "0011", "--set", "lyndon"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["rank_lyndon"] == "1"

    def test_rank_shorter_length(self, capsys):
        assert main(["--json", "rank", "0011", "--length", "2"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["length"] == 2

    @pytest.mark.parametrize("argv", [["rank", "01x1"], ["rank", "0011", "--length", "5"], ["rank"]])
    def test_rank_invalid(self, argv):
        assert main(argv) == EXIT_INVALID


class TestOtherCommands:
    """Test unrank, count and enumerate"""

    def test_unrank(self, capsys):
        assert main(["unrank", "2", "--length", "4"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "0011"

    def test_unrank_out_of_range(self):
        assert main(["unrank", "4", "--length", "4"]) == EXIT_INVALID

    def test_count(self, capsys):
        assert main(["count", "--length", "4"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "4"

    def test_count_json_is_string(self, capsys):
        assert main(["--json", "count", "--length", "40", "--set", "necklace"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert isinstance(payload["count"], str)

    def test_enumerate(self, capsys):
        assert main(["enumerate", "--length", "3"]) == EXIT_OK
        assert capsys.readouterr().out.split() == ["000", "001"]

    def test_enumerate_too_long(self):
        assert main(["enumerate", "--length", "17"]) == EXIT_INVALID


class TestVerifyAndBench:
    """Test the oracle comparison and the benchmark"""

    def test_verify_small(self, capsys):
        assert main(["--json", "verify", "--max-length", "4"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert [row["classes"] for row in payload["checked"]] == [1, 2, 2, 4]
        assert payload["mismatches"] == []

    def test_verify_fault_injection(self):
        with patch("src.ranking.symmetric_rank.mobius", side_effect=_flipped_mobius):
            assert main(["verify", "--max-length", "4"]) == EXIT_MISMATCH

    def test_verify_bound(self):
        assert main(["verify", "--max-length", "17"]) == EXIT_INVALID

    @pytest.mark.slow
    def test_verify_default_length(self):
        assert main(["verify", "--max-length", "10"]) == EXIT_OK

    def test_bench(self, capsys):
        assert main(["--json", "bench", "--lengths", "4,6,8"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert [row["length"] for row in payload["rows"]] == [4, 6, 8]

    def test_bench_reports_memo_tables(self, capsys):
        assert main(["--json", "bench", "--lengths", "6,8"]) == EXIT_OK
        rows = json.loads(capsys.readouterr().out)["rows"]
        assert all("y_states" in row for row in rows)
        for name in ("alpha_states", "beta_states", "enc_c_states", "enc_tail_states", "enc_y_states"):
            assert all(row[name] > 0 for row in rows), name

    def test_bench_rejects_zero_length(self):
        assert main(["bench", "--lengths", "0"]) == EXIT_INVALID
