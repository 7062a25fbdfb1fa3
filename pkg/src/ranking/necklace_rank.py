"""
Rank within plain (labelled) necklaces, plus the classical counting formulas.

The words of length e with no rotation below w are counted as closed walks
of the pending-tie scanner: guess the tie state the word leaves behind
(its anchor), scan from that state, and require the scan to end where it
started. Möbius inversion over the divisors of m then turns word counts
into necklace counts.
"""
import logging
from collections import Counter
from typing import Dict

from src.errors import InvalidWordError, NonCanonicalWordError
from src.ranking.divisor_sums import divisors, exact_divide, mobius, primitive_count, totient
from src.ranking.pending import advance_pending, tie_is_below
from src.words.word_core import SYMBOLS, is_necklace, next_necklace, period

logger = logging.getLogger(__name__)


def count_necklaces(m: int) -> int:
    if m < 1:
        raise InvalidWordError(f"Length must be positive, got {m}")
    return exact_divide(sum(totient(m // d) * 2 ** d for d in divisors(m)), m, "necklace count")


def count_lyndon(m: int) -> int:
    if m < 1:
        raise InvalidWordError(f"Length must be positive, got {m}")
    return exact_divide(sum(mobius(m // d) * 2 ** d for d in divisors(m)), m, "Lyndon count")


def clear_words(w: str, length: int, compare_length: int) -> int:
    """Number of words of the given length none of whose rotations is below w"""
    reference = w[:length]
    total = 0
    for anchor in range(length):
        states = Counter({anchor: 1})
        for _ in range(length):
            advanced: Counter = Counter()
            for pending, ways in states.items():
                for symbol in SYMBOLS:
                    nxt = advance_pending(reference, pending, symbol)
                    if nxt is None or nxt == length:
                        continue
                    advanced[nxt] += ways
            states = advanced
        total += states[anchor]

    if not tie_is_below(w, length, compare_length):
        # rotations of w itself tie exactly and are not below
        total += period(w)
    return total


def words_below(w: str, length: int, compare_length: int) -> int:
    """Number of words of the given length with some rotation below w"""
    return 2 ** length - clear_words(w, length, compare_length)


def _necklace_reference(w: str, m: int) -> str:
    n = len(w)
    if not 1 <= m <= n:
        raise InvalidWordError(f"Necklace length {m} outside [1, {n}]")
    if is_necklace(w):
        return w
    if m != n:
        raise NonCanonicalWordError(f"{w} is not a necklace; cross-length ranking needs a necklace")
    return next_necklace(w)


def rank_necklaces(w: str, m: int) -> int:
    """Number of necklaces of length m whose representative is smaller than w"""
    reference = _necklace_reference(w, m)
    if "0" not in reference:
        return count_necklaces(m) - (1 if m == len(w) else 0)

    cache: Dict[int, int] = {}

    def below(e: int) -> int:
        if e not in cache:
            cache[e] = words_below(reference, e, m)
        return cache[e]

    rank = 0
    for d in divisors(m):
        rank += exact_divide(primitive_count(d, below), d, f"Lyndon words of length {d} below {reference}")
    logger.debug(f"rank_necklaces({w}, {m}) = {rank}")
    return rank


def rank_lyndon(w: str) -> int:
    """Number of Lyndon words of length |w| smaller than the necklace w"""
    if not is_necklace(w):
        raise NonCanonicalWordError(f"{w} is not a necklace")
    n = len(w)
    own_root = 1 if period(w) < n else 0
    ranks: Dict[int, int] = {}
    for d in divisors(n):
        shorter = sum(ranks[e] for e in divisors(d) if e < d)
        ranks[d] = rank_necklaces(w, d) - shorter + (own_root if d == n else 0)
    return ranks[n]
