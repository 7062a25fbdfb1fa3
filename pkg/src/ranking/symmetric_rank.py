"""
Rank within symmetric unlabelled necklaces.

A symmetric necklace of length m has an antiperiod r: its words satisfy
v = a·S(a) repeated, with |a| = r and 2r | m. Antiperiodic words whose
necklace lies below w are split by the first shift j in [1, r] at which a
rotation drops below w:

- alpha(j): shifts 1..j-1 stay at or above w, shift j drops below;
- beta(j): alpha(j) and additionally every shift in r+1..2r (the identity
  included) stays at or above w.

Every word of the necklace is counted once in alpha + beta over j, which
gives the word count RA(r); Möbius inversion over odd quotients of r
isolates minimal antiperiods, and dividing by 2r counts necklaces.

The DPs read the half a one symbol at a time. Their state holds the
pending tie of the scanned rotations and a Bound locating the consumed
prefix (or its complement) among the subwords of w.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from src.errors import InvalidWordError
from src.ranking.divisor_sums import divisors, exact_divide, mobius
from src.ranking.pending import (
    advance_pending,
    border_chain,
    drops_below,
    failure_table,
    require_dp_reference,
    tie_is_below,
)
from src.words.bound_table import ROOT, Bound, WxTable, build_wx
from src.words.word_core import SYMBOLS, complement, flip, rotate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SymDpKeySA:
    """State of the alpha DP after consuming i symbols of the half"""
    p: int
    bound: Bound
    i: int
    j: int
    r: int

    def __post_init__(self):
        if not 1 <= self.j <= self.r:
            raise InvalidWordError(f"Target shift {self.j} outside [1, {self.r}]")
        if not 0 <= self.p <= self.i <= self.r or self.bound.length != self.i:
            raise InvalidWordError(f"Malformed alpha key {self}")


@dataclass(frozen=True)
class SymDpKeySB:
    """State of the beta DP: front/back pending ties and bounds of the prefix and its complement"""
    p_f: int
    p_b: int
    bound_f: Bound
    bound_b: Bound
    i: int
    j: int
    r: int

    def __post_init__(self):
        if not 1 <= self.j <= self.r:
            raise InvalidWordError(f"Target shift {self.j} outside [1, {self.r}]")
        if not (0 <= self.p_f <= self.i and 0 <= self.p_b <= self.i and self.i <= self.r):
            raise InvalidWordError(f"Malformed beta key {self}")
        if self.bound_f.length != self.i or self.bound_b.length != self.i:
            raise InvalidWordError(f"Bounds of beta key {self} do not match its length")


class AntiperiodicCounter:
    """
    alpha/beta counts for antiperiodic words of length 2r.

    Rotations are compared with w after repeating the word to
    ``compare_length`` (default 2r). Memo tables belong to the instance.
    """

    def __init__(self, w: str, r: int, compare_length: Optional[int] = None, table: Optional[WxTable] = None):
        require_dp_reference(w)
        self.w = w
        self.r = r
        self.size = 2 * r
        self.compare_length = compare_length or self.size
        if r < 1 or self.compare_length > len(w) or self.compare_length % self.size:
            raise InvalidWordError(
                f"Antiperiod {r} incompatible with comparison length {self.compare_length} and |w| = {len(w)}"
            )
        self.reference = w[:self.size]
        self.tie_below = tie_is_below(w, self.size, self.compare_length)
        self.table = table if table is not None and table.reference == w else build_wx(w)
        self.failure = failure_table(self.reference)
        self.logger = logging.getLogger(__name__)

        self._alpha_memo: Dict[int, Dict[Tuple, int]] = {}
        self._beta_memo: Dict[int, Dict[Tuple, int]] = {}
        self._y_memo: Dict[Tuple, int] = {}

    # ----- direct checks on a fully known half -----

    def _drops(self, word: str, shift: int) -> bool:
        return drops_below(rotate(word, shift), self.reference, self.tie_below)

    def in_alpha(self, a: str, j: int) -> bool:
        word = a + complement(a)
        first = next((shift for shift in range(1, self.r + 1) if self._drops(word, shift)), None)
        return first == j

    def second_half_clear(self, a: str) -> bool:
        word = a + complement(a)
        return not any(self._drops(word, shift) for shift in range(self.r + 1, self.size + 1))

    def in_beta(self, a: str, j: int) -> bool:
        return self.in_alpha(a, j) and self.second_half_clear(a)

    def _back_clear(self, back: int, bound_f: Bound) -> bool:
        """Rotations tied at the end of S(a) compare the whole half a against subwords of w"""
        for k in border_chain(self.failure, back):
            if not bound_f.above(self.reference[k:k + self.r]):
                return False
        return True

    # ----- alpha -----

    def alpha(self, j: int) -> int:
        return self.sa(SymDpKeySA(p=0, bound=ROOT, i=0, j=j, r=self.r))

    def sa(self, key: SymDpKeySA) -> int:
        if key.r != self.r:
            raise InvalidWordError(f"Key antiperiod {key.r} does not match counter antiperiod {self.r}")
        memo = self._alpha_memo.setdefault(key.j, {})
        return self._sa(memo, key.j, key.p, key.bound, key.i)

    def _sa(self, memo: Dict[Tuple, int], j: int, pending: int, bound: Bound, consumed: int) -> int:
        state = (pending, bound, consumed)
        if state in memo:
            return memo[state]

        r, reference, table = self.r, self.reference, self.table
        total = 0
        if consumed < j:
            for symbol in SYMBOLS:
                # the identity rotation is unconstrained, so position 1 opens no tie
                nxt = pending if consumed == 0 else advance_pending(reference, pending, symbol)
                if nxt is not None:
                    total += self._sa(memo, j, nxt, table.advance(bound, flip(symbol)), consumed + 1)
        elif pending != consumed - j:
            total = 0
        elif consumed == r:
            total = self._alpha_close(j, bound)
        else:
            expected = reference[pending]
            if expected == "1":
                total += 2 ** (r - consumed - 1)
            total += self._sa(memo, j, pending + 1, table.advance(bound, flip(expected)), consumed + 1)

        memo[state] = total
        return total

    def alpha_key(self, prefix: str, j: int) -> Optional[SymDpKeySA]:
        """Key reached by reading a prefix of the half; None once the prefix leaves the keyed states"""
        pending, bound = 0, ROOT
        for consumed, symbol in enumerate(prefix):
            if consumed < j:
                nxt = pending if consumed == 0 else advance_pending(self.reference, pending, symbol)
            elif pending != consumed - j or symbol != self.reference[pending]:
                return None
            else:
                nxt = pending + 1
            if nxt is None:
                return None
            pending, bound = nxt, self.table.advance(bound, flip(symbol))
        return SymDpKeySA(p=pending, bound=bound, i=len(prefix), j=j, r=self.r)

    def _alpha_close(self, j: int, bound: Bound) -> int:
        """Shift j tied through the first half; S(a) decides against w[r-j:2r-j]"""
        if bound.exact:
            return int(self.in_alpha(complement(bound.value), j))
        return int(bound.below(self.reference[self.r - j:self.size - j]))

    # ----- beta -----

    def beta(self, j: int) -> int:
        total = self.sb(SymDpKeySB(p_f=0, p_b=0, bound_f=ROOT, bound_b=ROOT, i=0, j=j, r=self.r))
        self.logger.debug(f"beta({self.w}, r={self.r}, j={j}) = {total}")
        return total

    def sb(self, key: SymDpKeySB) -> int:
        if key.r != self.r:
            raise InvalidWordError(f"Key antiperiod {key.r} does not match counter antiperiod {self.r}")
        memo = self._beta_memo.setdefault(key.j, {})
        return self._sb(memo, key.j, key.p_f, key.p_b, key.bound_f, key.bound_b, key.i)

    def _sb(self, memo, j: int, front: int, back: int, bound_f: Bound, bound_b: Bound, consumed: int) -> int:
        state = (front, back, bound_f, bound_b, consumed)
        if state in memo:
            return memo[state]

        r, reference, table = self.r, self.reference, self.table
        total = 0
        if consumed < j:
            for symbol in SYMBOLS:
                nxt_front = advance_pending(reference, front, symbol)
                if nxt_front is None:
                    continue
                # S(a) opens its tracked rotations from its second symbol on
                nxt_back = back if consumed == 0 else advance_pending(reference, back, flip(symbol))
                if nxt_back is None:
                    continue
                total += self._sb(
                    memo, j, nxt_front, nxt_back,
                    table.advance(bound_f, symbol), table.advance(bound_b, flip(symbol)), consumed + 1,
                )
        elif front != consumed - j:
            total = 0
        elif consumed == r:
            total = self._beta_close(j, back, bound_f, bound_b)
        else:
            expected = reference[front]
            nxt_back = advance_pending(reference, back, flip(expected))
            if nxt_back is not None:
                total += self._sb(
                    memo, j, front + 1, nxt_back,
                    table.advance(bound_f, expected), table.advance(bound_b, flip(expected)), consumed + 1,
                )
            if expected == "1":
                nxt_back = advance_pending(reference, back, "1")
                if nxt_back is not None:
                    total += self.y(r - consumed - 1, nxt_back, table.advance(bound_f, "0"))

        memo[state] = total
        return total

    def beta_key(self, prefix: str, j: int) -> Optional[SymDpKeySB]:
        """Key reached by reading a prefix of the half; None once the prefix leaves the keyed states"""
        front, back, bound_f, bound_b = 0, 0, ROOT, ROOT
        for consumed, symbol in enumerate(prefix):
            if consumed < j:
                nxt_front = advance_pending(self.reference, front, symbol)
            elif front != consumed - j or symbol != self.reference[front]:
                return None
            else:
                nxt_front = front + 1
            nxt_back = back if consumed == 0 else advance_pending(self.reference, back, flip(symbol))
            if nxt_front is None or nxt_back is None:
                return None
            front, back = nxt_front, nxt_back
            bound_f, bound_b = self.table.advance(bound_f, symbol), self.table.advance(bound_b, flip(symbol))
        return SymDpKeySB(p_f=front, p_b=back, bound_f=bound_f, bound_b=bound_b, i=len(prefix), j=j, r=self.r)

    def _beta_close(self, j: int, back: int, bound_f: Bound, bound_b: Bound) -> int:
        if bound_f.exact or bound_b.exact:
            a = bound_f.value if bound_f.exact else complement(bound_b.value)
            return int(self.in_beta(a, j))
        if not bound_b.below(self.reference[self.r - j:self.size - j]):
            return 0
        return int(self._back_clear(back, bound_f))

    # ----- continuations once shift j has dropped -----

    def y(self, remaining: int, back: int, bound_f: Bound) -> int:
        """Completions of the half keeping every second-half rotation at or above w"""
        state = (remaining, back, bound_f)
        if state in self._y_memo:
            return self._y_memo[state]

        if remaining == 0:
            if bound_f.exact:
                total = int(self.second_half_clear(bound_f.value))
            else:
                total = int(self._back_clear(back, bound_f))
        else:
            total = 0
            for symbol in SYMBOLS:
                nxt_back = advance_pending(self.reference, back, flip(symbol))
                if nxt_back is not None:
                    total += self.y(remaining - 1, nxt_back, self.table.advance(bound_f, symbol))

        self._y_memo[state] = total
        return total

    def memo_sizes(self) -> Dict[str, int]:
        return {
            "alpha": sum(len(memo) for memo in self._alpha_memo.values()),
            "beta": sum(len(memo) for memo in self._beta_memo.values()),
            "y": len(self._y_memo),
        }


def sa(w: str, key: SymDpKeySA, compare_length: Optional[int] = None) -> int:
    return AntiperiodicCounter(w, key.r, compare_length).sa(key)


def sb(w: str, key: SymDpKeySB, compare_length: Optional[int] = None) -> int:
    return AntiperiodicCounter(w, key.r, compare_length).sb(key)


def alpha_size(w: str, r: int, j: int, compare_length: Optional[int] = None) -> int:
    if not 1 <= j <= r:
        raise InvalidWordError(f"Target shift {j} outside [1, {r}]")
    return AntiperiodicCounter(w, r, compare_length).alpha(j)


def beta_size(w: str, r: int, j: int, compare_length: Optional[int] = None) -> int:
    if not 1 <= j <= r:
        raise InvalidWordError(f"Target shift {j} outside [1, {r}]")
    return AntiperiodicCounter(w, r, compare_length).beta(j)


def y_sym(w: str, i: int, p_b: int, bound_f: Bound, compare_length: Optional[int] = None) -> int:
    """Completions of length i after a prefix described by (p_b, bound_f); the half has length |bound_f| + i"""
    if i < 0 or p_b < 0:
        raise InvalidWordError(f"Malformed continuation arguments i={i}, p_b={p_b}")
    r = bound_f.length + i
    if p_b >= 2 * r:
        raise InvalidWordError(f"Pending tie {p_b} too long for antiperiod {r}")
    return AntiperiodicCounter(w, r, compare_length).y(i, p_b, bound_f)


def ra_size(w: str, m: int, r: int, table: Optional[WxTable] = None) -> int:
    """Words v of length m with v_i = S(v_{i+r}) whose necklace is symmetric and below w"""
    if m > len(w):
        raise InvalidWordError(f"Length {m} exceeds |w| = {len(w)}")
    if r < 1 or m % (2 * r):
        return 0
    counter = AntiperiodicCounter(w, r, m, table)
    total = sum(counter.alpha(j) + counter.beta(j) for j in range(1, r + 1))
    logger.debug(f"ra_size({w}, {m}, {r}) = {total}; memo {counter.memo_sizes()}")
    return total


def rank_sym_lyndon(
    w: str,
    length: int,
    compare_length: Optional[int] = None,
    table: Optional[WxTable] = None,
    ra_cache: Optional[Dict[int, int]] = None,
) -> int:
    """Symmetric Lyndon words of the given length below w (compared at compare_length)"""
    if length % 2:
        return 0
    m = compare_length or length
    r = length // 2
    table = table if table is not None else build_wx(w)
    ra_cache = {} if ra_cache is None else ra_cache

    minimal = 0
    for d in divisors(r):
        if (r // d) % 2 == 0:
            continue
        if d not in ra_cache:
            ra_cache[d] = ra_size(w, m, d, table)
        minimal += mobius(r // d) * ra_cache[d]
    return exact_divide(minimal, length, f"symmetric Lyndon words of length {length} below {w}")


def rank_sym_necklaces(w: str, m: int) -> int:
    """Symmetric necklaces of length m below w"""
    if not 1 <= m <= len(w):
        raise InvalidWordError(f"Length {m} outside [1, {len(w)}]")
    if m % 2:
        return 0
    require_dp_reference(w)
    table = build_wx(w)
    ra_cache: Dict[int, int] = {}
    rank = sum(
        rank_sym_lyndon(w, 2 * r, m, table, ra_cache)
        for r in divisors(m // 2)
    )
    logger.debug(f"rank_sym_necklaces({w}, {m}) = {rank}")
    return rank


def symmetric_memo_states(w: str, m: Optional[int] = None) -> Dict[str, int]:
    """alpha, beta and continuation memo entries over every antiperiod and target shift at length m"""
    m = m or len(w)
    table = build_wx(w)
    states = {"alpha": 0, "beta": 0, "y": 0}
    for r in divisors(m // 2) if m % 2 == 0 else []:
        counter = AntiperiodicCounter(w, r, m, table)
        for j in range(1, r + 1):
            counter.alpha(j)
            counter.beta(j)
        for name, size in counter.memo_sizes().items():
            states[name] += size
    return states
