"""
Rank, unrank and count binary unlabelled necklaces.

Every unlabelled class of length m is asymmetric with both necklaces below
w, symmetric, or enclosing w (exactly one necklace below). Plain necklace
ranks count asymmetric classes twice, which gives

    RankN = 2 * RankAN + RankSN + RankEN
    RankUN = RankAN + RankSN + RankEN
"""
import logging
from dataclasses import dataclass, asdict
from typing import Dict, Optional

from src.errors import ConventionError, InvalidWordError, NonCanonicalWordError
from src.ranking.divisor_sums import divisors, exact_divide, primitive_count, totient
from src.ranking.enclosing_rank import rank_enclosing
from src.ranking.necklace_rank import rank_necklaces
from src.ranking.symmetric_rank import rank_sym_necklaces
from src.words.word_core import canonical, complement, is_canonical_unlabelled, next_necklace, period

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RankBreakdown:
    """The four rank components of one query word and their total"""
    rank_necklace: int
    rank_symmetric: int
    rank_enclosing: int
    rank_asymmetric: int
    rank_total: int

    def __post_init__(self):
        values = asdict(self)
        if any(value < 0 for value in values.values()):
            raise ConventionError(f"Negative rank component in {values}")
        if self.rank_total != self.rank_asymmetric + self.rank_symmetric + self.rank_enclosing:
            raise ConventionError(f"Total does not add up: {values}")
        if self.rank_necklace != 2 * self.rank_asymmetric + self.rank_symmetric + self.rank_enclosing:
            raise ConventionError(f"Necklace rank does not decompose: {values}")

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


def _components(w: str, m: int):
    return rank_necklaces(w, m), rank_sym_necklaces(w, m), rank_enclosing(w, m)


def rank_unlabelled(w: str, m: Optional[int] = None) -> RankBreakdown:
    """Rank of the canonical unlabelled representative w among unlabelled necklaces of length m"""
    m = len(w) if m is None else m
    if not 1 <= m <= len(w):
        raise InvalidWordError(f"Length {m} outside [1, {len(w)}]")
    if not is_canonical_unlabelled(w):
        raise NonCanonicalWordError(f"{w} is not a canonical unlabelled representative")

    necklace, symmetric, enclosing = _components(w, m)
    asymmetric = exact_divide(necklace - symmetric - enclosing, 2, f"asymmetric classes below {w}")
    breakdown = RankBreakdown(
        rank_necklace=necklace,
        rank_symmetric=symmetric,
        rank_enclosing=enclosing,
        rank_asymmetric=asymmetric,
        rank_total=asymmetric + symmetric + enclosing,
    )
    logger.info(f"rank_unlabelled({w}, {m}) = {breakdown.rank_total}")
    return breakdown


def count_unlabelled(n: int) -> int:
    """Binary unlabelled necklaces of length n: (1/2n) * sum over d | n of phi(2d) * 2^(n/d)"""
    if n < 1:
        raise InvalidWordError(f"Length must be positive, got {n}")
    return exact_divide(sum(totient(2 * d) * 2 ** (n // d) for d in divisors(n)), 2 * n, "unlabelled count")


def count_unlabelled_lyndon(n: int) -> int:
    """Aperiodic binary unlabelled necklaces of length n"""
    if n < 1:
        raise InvalidWordError(f"Length must be positive, got {n}")
    return primitive_count(n, count_unlabelled)


def rank_unlabelled_lyndon(w: str) -> int:
    """Rank of w among aperiodic unlabelled necklaces of length |w|"""
    if not is_canonical_unlabelled(w):
        raise NonCanonicalWordError(f"{w} is not a canonical unlabelled representative")
    n = len(w)
    own_root = 1 if period(w) < n else 0
    ranks: Dict[int, int] = {}
    for d in divisors(n):
        shorter = sum(ranks[e] for e in divisors(d) if e < d)
        ranks[d] = rank_unlabelled(w, d).rank_total - shorter + (own_root if d == n else 0)
    return ranks[n]


def _classes_below_necklace(y: str) -> int:
    n = len(y)
    if "0" not in y:
        return count_unlabelled(n)
    # a necklace that is not canonical contributes its own class through <S(y)> < y
    own = 1 if canonical(complement(y)) < y else 0
    necklace, symmetric, enclosing = _components(y, n)
    asymmetric = exact_divide(necklace - symmetric - enclosing - own, 2, f"asymmetric classes below {y}")
    return asymmetric + symmetric + enclosing + own


def classes_below(x: str) -> int:
    """Unlabelled classes of length |x| whose representative is smaller than the arbitrary word x"""
    return _classes_below_necklace(next_necklace(x))


def unrank_unlabelled(k: int, n: int) -> str:
    """Canonical representative of the (k+1)-th smallest unlabelled necklace of length n"""
    if n < 1:
        raise InvalidWordError(f"Length must be positive, got {n}")
    total = count_unlabelled(n)
    if not 0 <= k < total:
        raise InvalidWordError(f"Rank {k} outside [0, {total})")

    low, high = 0, 2 ** n
    while high - low > 1:
        middle = (low + high) // 2
        if classes_below(format(middle, f"0{n}b")) <= k:
            low = middle
        else:
            high = middle

    word = format(low, f"0{n}b")
    if not is_canonical_unlabelled(word):
        raise ConventionError(f"Unranking {k} at length {n} landed on non-canonical {word}")
    logger.debug(f"unrank_unlabelled({k}, {n}) = {word}")
    return word
