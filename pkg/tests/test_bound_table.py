"""
Tests for bounding subwords and the WX table
"""
import pytest

from src.errors import MissingBoundError
from src.oracle.brute_force import enumerate_necklaces
from src.words.bound_table import (
    EMPTY,
    ROOT,
    SubwordIndex,
    build_wx,
    dump_wx,
    strict_bound,
    wx_lookup,
    wx_mismatches,
)


class TestStrictBound:
    """Test the largest subword strictly below a word"""

    def test_bound_between_subwords(self):
        assert strict_bound("11", "0001").value == "10"
        assert strict_bound("111", "0001").value == "100"

    def test_subword_has_no_bound(self):
        assert strict_bound("00", "0001") is None

    def test_below_everything_has_no_bound(self):
        assert strict_bound("00", "0101") is None

    def test_ref_uses_smallest_start(self):
        ref = strict_bound("11", "0001")
        assert ref.start == 4
        assert ref.length == 2


class TestWxTable:
    """Test WX construction, lookup and bound advancement"""

    @pytest.fixture
    def table(self):
        return build_wx("0001")

    def test_known_entries(self, table):
        ten = table.index.find("10")
        assert wx_lookup(table, ten, "0").value == "100"
        assert wx_lookup(table, ten, "1").value == "100"

    def test_missing_entry_fails_loudly(self, table):
        # 00 bounds no word: 01 is a subword too
        with pytest.raises(MissingBoundError):
            wx_lookup(table, table.index.find("00"), "0")

    def test_lookup_agrees_with_recomputation(self, table):
        index = SubwordIndex("0001")
        for (ref, symbol), target in table.entries.items():
            if ref == EMPTY:
                assert index.strict_bound(symbol) == target
            else:
                successor = format(int(ref.value, 2) + 1, f"0{ref.length}b")
                assert index.strict_bound(successor + symbol) == target

    def test_advance_tracks_exact_prefixes(self, table):
        bound = ROOT
        for symbol in "00":
            bound = table.advance(bound, symbol)
        assert bound.exact and bound.value == "00"

        bound = table.advance(table.advance(ROOT, "1"), "1")
        assert not bound.exact
        assert bound.value == "10"
        bound = table.advance(bound, "1")
        assert bound.value == "100"

    def test_strictly_bounded_comparisons(self, table):
        bound = table.advance(table.advance(ROOT, "1"), "1")
        assert bound.above("10")
        assert bound.below("11")
        assert not bound.below("10")

    def test_dump_lines(self, table):
        lines = dump_wx(table)
        assert "2 4 10 0 -> 4 100" in lines
        assert len(lines) == len(table)

    @pytest.mark.parametrize("w", [w for n in range(1, 8) for w in enumerate_necklaces(n) if w[0] == "0"])
    def test_no_mismatches_small(self, w):
        assert wx_mismatches(build_wx(w)) == []

    @pytest.mark.slow
    @pytest.mark.parametrize("w", [w for n in range(8, 13) for w in enumerate_necklaces(n) if w[0] == "0"])
    def test_no_mismatches_longer(self, w):
        assert wx_mismatches(build_wx(w)) == []
