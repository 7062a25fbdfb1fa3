"""
Tests for the brute-force oracle
"""
import json

import pytest

from src.errors import InvalidWordError, OracleBoundError
from src.oracle.brute_force import (
    ClassTable,
    enumerate_classes,
    enumerate_necklaces,
    oracle_rank,
    oracle_set,
)


class TestEnumeration:
    """Test necklace and class enumeration"""

    def test_necklaces_of_length_four(self):
        assert enumerate_necklaces(4) == ["0000", "0001", "0011", "0101", "0111", "1111"]

    @pytest.mark.parametrize("n,classes,symmetric", [(4, 4, 2), (5, 4, 0), (1, 1, 0), (6, 8, 2)])
    def test_class_counts(self, n, classes, symmetric):
        table = enumerate_classes(n)
        assert len(table.classes) == classes
        assert sum(info.symmetric for info in table.classes) == symmetric

    def test_representatives_sorted(self):
        assert enumerate_classes(4).representatives == ["0000", "0001", "0011", "0101"]
        assert enumerate_classes(3).representatives == ["000", "001"]

    def test_class_info(self):
        info = enumerate_classes(4).classes[1]
        assert info.representative == "0001"
        assert info.necklaces == ("0001", "0111")
        assert not info.symmetric
        assert info.period == 4

    def test_json_lines(self):
        lines = enumerate_classes(2).to_json_lines()
        assert [json.loads(line)["representative"] for line in lines] == ["00", "01"]
        assert json.loads(lines[1])["symmetric"] is True

    def test_empty_table(self):
        assert ClassTable(n=3).representatives == []

    def test_bound_enforced(self):
        with pytest.raises(OracleBoundError):
            enumerate_classes(17)
        with pytest.raises(OracleBoundError):
            enumerate_necklaces(9, max_length=8)

    def test_rejects_nonpositive_length(self):
        with pytest.raises(InvalidWordError):
            enumerate_classes(0)


class TestOracleRank:
    """Test definitional rank components"""

    @pytest.mark.parametrize(
        "w,m,which,expected",
        [("0011", 4, "enclosing", 2), ("0101", 4, "symmetric", 1), ("0011", 4, "unlabelled", 2), ("0011", 1, "necklace", 1)],
    )
    def test_examples(self, w, m, which, expected):
        assert oracle_rank(w, m, which) == expected

    def test_unknown_selector(self):
        with pytest.raises(InvalidWordError, match="Unknown rank selector"):
            oracle_rank("0011", 4, "labelled")


class TestOracleSets:
    """Test literal member sets"""

    def test_alpha_members(self):
        assert oracle_set("alpha", "0111", r=1, j=1) == {"10"}

    def test_gamma_members(self):
        assert oracle_set("gamma", "0011", m=4, r=1) == {"0000", "0001", "1000"}

    def test_prefix_filter(self):
        assert oracle_set("A", "0111", r=1, j=1, prefix="0") == set()

    def test_unknown_kind(self):
        with pytest.raises(InvalidWordError):
            oracle_set("delta", "0011", m=4)

    def test_size_bound(self):
        with pytest.raises(OracleBoundError):
            oracle_set("en", "0" * 21, m=21)
