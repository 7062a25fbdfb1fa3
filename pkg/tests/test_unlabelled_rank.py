"""
Tests for unlabelled ranking, unranking and counting
"""
import time

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from config.settings import BENCH_SEED
from src.errors import ConventionError, InvalidWordError, NonCanonicalWordError
from src.oracle.brute_force import all_words, enumerate_classes, oracle_rank
from src.ranking.unlabelled_rank import (
    RankBreakdown,
    classes_below,
    count_unlabelled,
    count_unlabelled_lyndon,
    rank_unlabelled,
    rank_unlabelled_lyndon,
    unrank_unlabelled,
)
from src.words.word_core import canonical_unlabelled, period

COMPONENTS = {
    "necklace": "rank_necklace",
    "symmetric": "rank_symmetric",
    "enclosing": "rank_enclosing",
    "asymmetric": "rank_asymmetric",
    "unlabelled": "rank_total",
}


class TestRankBreakdown:
    """Test the component identities"""

    def test_consistent_breakdown(self):
        breakdown = RankBreakdown(rank_necklace=3, rank_symmetric=1, rank_enclosing=2, rank_asymmetric=0, rank_total=3)
        assert breakdown.to_dict()["rank_total"] == 3

    def test_broken_total_trips(self):
        with pytest.raises(ConventionError, match="Total"):
            RankBreakdown(rank_necklace=3, rank_symmetric=1, rank_enclosing=2, rank_asymmetric=0, rank_total=4)

    def test_negative_component_trips(self):
        with pytest.raises(ConventionError, match="Negative"):
            RankBreakdown(rank_necklace=1, rank_symmetric=-1, rank_enclosing=2, rank_asymmetric=0, rank_total=1)


class TestRankUnlabelled:
    """Test the full unlabelled rank"""

    @pytest.mark.parametrize(
        "w,expected",
        [
            ("0011", {"rank_necklace": 2, "rank_symmetric": 0, "rank_enclosing": 2, "rank_asymmetric": 0, "rank_total": 2}),
            ("0101", {"rank_necklace": 3, "rank_symmetric": 1, "rank_enclosing": 2, "rank_asymmetric": 0, "rank_total": 3}),
            ("0000", {"rank_necklace": 0, "rank_symmetric": 0, "rank_enclosing": 0, "rank_asymmetric": 0, "rank_total": 0}),
        ],
    )
    def test_examples(self, w, expected):
        assert rank_unlabelled(w).to_dict() == expected

    def test_rejects_non_canonical(self):
        with pytest.raises(NonCanonicalWordError):
            rank_unlabelled("1110")

    def test_rejects_bad_length(self):
        with pytest.raises(InvalidWordError):
            rank_unlabelled("0011", 0)

    @staticmethod
    def _check_components(n):
        for w in enumerate_classes(n).representatives:
            for m in range(1, n + 1):
                breakdown = rank_unlabelled(w, m).to_dict()
                for selector, key in COMPONENTS.items():
                    assert breakdown[key] == oracle_rank(w, m, selector), (w, m, selector)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_matches_oracle_every_component(self, n):
        self._check_components(n)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(8, 15))
    def test_matches_oracle_longer(self, n):
        self._check_components(n)

    @pytest.mark.slow
    def test_length_thirty_two_within_a_minute(self):
        rng = np.random.default_rng(BENCH_SEED)
        word = canonical_unlabelled("".join(str(int(s)) for s in rng.integers(0, 2, size=32)))
        start = time.perf_counter()
        rank_unlabelled(word)
        assert time.perf_counter() - start < 60

    @pytest.mark.parametrize("n", range(1, 9))
    def test_ranks_are_positions(self, n):
        representatives = enumerate_classes(n).representatives
        assert [rank_unlabelled(w).rank_total for w in representatives] == list(range(len(representatives)))


class TestCounts:
    """Test unlabelled counting"""

    @pytest.mark.parametrize("n,expected", [(1, 1), (3, 2), (4, 4), (5, 4), (6, 8)])
    def test_count_examples(self, n, expected):
        assert count_unlabelled(n) == expected

    @staticmethod
    def _check_counts(n):
        table = enumerate_classes(n)
        assert count_unlabelled(n) == len(table.classes)
        assert count_unlabelled_lyndon(n) == sum(1 for info in table.classes if info.period == n)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_counts_match_enumeration(self, n):
        self._check_counts(n)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(13, 17))
    def test_counts_match_enumeration_longer(self, n):
        self._check_counts(n)

    def test_rejects_nonpositive_length(self):
        with pytest.raises(InvalidWordError):
            count_unlabelled(0)


class TestLyndonRank:
    """Test the rank among aperiodic classes"""

    @pytest.mark.parametrize("n", range(1, 9))
    def test_matches_enumeration(self, n):
        representatives = enumerate_classes(n).representatives
        aperiodic = [u for u in representatives if period(u) == n]
        for w in representatives:
            assert rank_unlabelled_lyndon(w) == sum(1 for u in aperiodic if u < w), w


class TestUnrank:
    """Test unranking and classes below arbitrary words"""

    @pytest.mark.parametrize("k,expected", [(0, "0000"), (2, "0011"), (3, "0101")])
    def test_examples(self, k, expected):
        assert unrank_unlabelled(k, 4) == expected

    @pytest.mark.parametrize("n", range(1, 9))
    def test_unranks_every_class(self, n):
        representatives = enumerate_classes(n).representatives
        assert [unrank_unlabelled(k, n) for k in range(len(representatives))] == representatives

    @pytest.mark.parametrize("n", range(1, 7))
    def test_classes_below_arbitrary_words(self, n):
        representatives = enumerate_classes(n).representatives
        for x in all_words(n):
            assert classes_below(x) == sum(1 for u in representatives if u < x), x

    def test_rank_out_of_range(self):
        with pytest.raises(InvalidWordError):
            unrank_unlabelled(4, 4)
        with pytest.raises(InvalidWordError):
            unrank_unlabelled(-1, 4)

    @settings(max_examples=25, deadline=None)
    @given(st.text(alphabet="01", min_size=1, max_size=9))
    def test_roundtrip(self, word):
        w = canonical_unlabelled(word)
        assert unrank_unlabelled(rank_unlabelled(w).rank_total, len(w)) == w

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(9, 15))
    def test_roundtrip_exhaustive_longer(self, n):
        for k in range(count_unlabelled(n)):
            assert rank_unlabelled(unrank_unlabelled(k, n)).rank_total == k

    @pytest.mark.slow
    def test_roundtrip_length_forty(self):
        rng = np.random.default_rng(BENCH_SEED)
        total = count_unlabelled(40)
        for k in rng.integers(0, total, size=100):
            word = unrank_unlabelled(int(k), 40)
            assert rank_unlabelled(word).rank_total == int(k)
