"""
Rank within unlabelled necklaces that enclose w: classes {<u>, <S(u)>} with
<u> < w < <S(u)>.

gamma(r) counts the words v of length m in such classes whose first
rotation below w is at shift r (shift m being the identity). Reading v
left to right:

- positions 1..r: rotations starting at 2..r must not drop below w and
  must all be decided by position r. The only thing the later positions
  need from v[1..r] is how it compares with the last r symbols of the
  reference, kept as a three-way order;
- positions r+1..m: shift r stays tied with w or drops below, after which
  only the complement side matters. The tied stretch is a fixed walk, so
  it is evaluated in closed form;
- the complement S(v) must have every rotation strictly above w. Its scan
  starts from a guessed anchor (the tie S(v) leaves at its end) and has to
  finish on that same anchor.

The complement transitions never look at the anchor, so the DP carries one
count per anchor in a numpy vector and only closes the walk at the end.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.errors import InvalidWordError
from src.ranking.divisor_sums import divisors, exact_divide, mobius
from src.ranking.pending import advance_pending, require_dp_reference, tie_is_below
from src.words.word_core import SYMBOLS, flip

logger = logging.getLogger(__name__)

# per-anchor sums stay below m * 2^m
INT64_MAX_LENGTH = 56

ORDERS = (-1, 0, 1)

Layer = Dict[Tuple[int, int, int], np.ndarray]


def _compare(symbol: str, expected: str) -> int:
    return (symbol > expected) - (symbol < expected)


@dataclass(frozen=True)
class EncDpKey:
    """
    State of the gamma DP after consuming i symbols.

    order compares v[1..min(i, r)] with the same-length prefix of the last r
    symbols of the reference (-1 below, 0 tied, 1 above).
    """
    i: int
    r: int
    order: int
    p_f: int
    p_b: int
    anchor: int

    def __post_init__(self):
        if not 1 <= self.r or not 0 <= self.i:
            raise InvalidWordError(f"Malformed enclosing key {self}")
        if self.order not in ORDERS or (self.i == 0 and self.order):
            raise InvalidWordError(f"Order of {self} is not a comparison of its first {min(self.i, self.r)} symbols")
        if not 0 <= self.p_f <= self.i or self.p_b < 0 or self.anchor < 0:
            raise InvalidWordError(f"Malformed enclosing key {self}")
        if self.i > self.r and self.p_f != self.i - self.r:
            raise InvalidWordError(f"Shift {self.r} of {self} is not tied past position {self.r}")


class EnclosingCounter:
    """gamma counts for words of length m compared with w at compare_length (default m)"""

    def __init__(self, w: str, m: int, compare_length: Optional[int] = None):
        require_dp_reference(w)
        self.w = w
        self.size = m
        self.compare_length = compare_length or m
        if m < 1 or self.compare_length > len(w) or self.compare_length % m:
            raise InvalidWordError(f"Length {m} incompatible with comparison length {self.compare_length}")
        self.reference = w[:m]
        self.tie_below = tie_is_below(w, m, self.compare_length)
        self.dtype = np.int64 if m <= INT64_MAX_LENGTH else object
        self.back_next: List[Dict[str, Optional[int]]] = [
            {symbol: self._back_step(back, symbol) for symbol in SYMBOLS} for back in range(m)
        ]
        self.walks = self._walk_table()
        self.logger = logging.getLogger(__name__)

        self._gamma: Dict[int, int] = {}
        self._tails: Dict[Tuple[int, int, int], Tuple[np.ndarray, Optional[int]]] = {}
        self._states = 0

    def _back_step(self, back: int, symbol: str) -> Optional[int]:
        """Complement-side scan: no rotation may drop below w or tie it over a full length"""
        nxt = advance_pending(self.reference, back, symbol)
        if nxt is None or nxt == self.size:
            return None
        return nxt

    def _walk_table(self) -> np.ndarray:
        """walks[k, b, a]: words of length k taking the complement scan from b to a"""
        m = self.size
        walks = np.zeros((m + 1, m, m), dtype=self.dtype)
        walks[0] = np.identity(m, dtype=self.dtype)
        for k in range(1, m + 1):
            for back in range(m):
                for nxt in self.back_next[back].values():
                    if nxt is not None:
                        walks[k, back] += walks[k - 1, nxt]
        return walks

    def _unit(self, anchor: int) -> np.ndarray:
        ways = np.zeros(self.size, dtype=self.dtype)
        ways[anchor] = 1
        return ways

    def _closes(self, order: int) -> bool:
        """v[1..r] against the last r symbols of the reference once shift r tied through the rest"""
        return order < 0 or (order == 0 and self.tie_below)

    # ----- gamma -----

    def gamma(self, r: int) -> int:
        if not 1 <= r <= self.size:
            raise InvalidWordError(f"Shift {r} outside [1, {self.size}]")
        if r not in self._gamma:
            start = {(0, 0, anchor): self._unit(anchor) for anchor in range(self.size)}
            self._gamma[r] = self._count(r, start, 0)
        return self._gamma[r]

    def en(self) -> int:
        total = sum(self.gamma(r) for r in range(1, self.size + 1))
        self.logger.debug(f"EN({self.w}, {self.size}) = {total} with memo sizes {self.memo_sizes()}")
        return total

    def c_size(self, key: EncDpKey) -> int:
        if key.i > self.size or key.r > self.size or key.p_b >= self.size or key.anchor >= self.size:
            raise InvalidWordError(f"Key {key} does not fit words of length {self.size}")
        return self._count(key.r, {(key.order, key.p_f, key.p_b): self._unit(key.anchor)}, key.i)

    def _count(self, r: int, layer: Layer, consumed: int) -> int:
        if consumed < r:
            layer = self._front(r, layer, consumed)
            consumed = r

        total = 0
        for (order, front, back), ways in layer.items():
            if front != consumed - r:
                continue
            drops, end = self._tail(r, back, front)
            total += int((ways * drops).sum())
            if end is not None and self._closes(order):
                total += int(ways[end])
        return total

    def _front(self, r: int, layer: Layer, consumed: int) -> Layer:
        """Advance every state through positions consumed+1..r"""
        reference = self.reference
        tail = reference[self.size - r:]
        for position in range(consumed, r):
            advanced: Layer = {}
            for (order, front, back), ways in layer.items():
                for symbol in SYMBOLS:
                    # rotations starting at 2..r are tracked; position 1 is the identity
                    nxt_front = front if position == 0 else advance_pending(reference, front, symbol)
                    if nxt_front is None:
                        continue
                    nxt_back = self.back_next[back][flip(symbol)]
                    if nxt_back is None:
                        continue
                    key = (order or _compare(symbol, tail[position]), nxt_front, nxt_back)
                    advanced[key] = advanced[key] + ways if key in advanced else ways
            self._states += len(advanced)
            layer = advanced
        return layer

    def _tail(self, r: int, back: int, start: int) -> Tuple[np.ndarray, Optional[int]]:
        """
        Shift r tied from reference[start] on: per-anchor counts of the
        continuations that drop below, and the complement state when the
        tie runs to the end (None if the complement fails on the way).
        """
        state = (r, back, start)
        if state in self._tails:
            return self._tails[state]

        rest = self.size - r
        drops = np.zeros(self.size, dtype=self.dtype)
        current: Optional[int] = back
        for front in range(start, rest):
            expected = self.reference[front]
            if expected == "1":
                dropped = self.back_next[current]["1"]
                if dropped is not None:
                    drops += self.walks[rest - front - 1, dropped]
            current = self.back_next[current][flip(expected)]
            if current is None:
                break

        self._tails[state] = (drops, current)
        return drops, current

    def trace(self, prefix: str, r: int, anchor: int) -> Optional[EncDpKey]:
        """Key reached by reading prefix from the given anchor; None once the prefix leaves the keyed states"""
        if not 1 <= r <= self.size or not 0 <= anchor < self.size or len(prefix) > self.size:
            raise InvalidWordError(f"Cannot trace {prefix!r} for shift {r} from anchor {anchor}")
        tail = self.reference[self.size - r:]
        order, front, back = 0, 0, anchor
        for position, symbol in enumerate(prefix):
            if position < r:
                nxt_front = front if position == 0 else advance_pending(self.reference, front, symbol)
                order = order or _compare(symbol, tail[position])
            elif front != position - r or symbol != self.reference[front]:
                return None
            else:
                nxt_front = front + 1
            nxt_back = self.back_next[back][flip(symbol)]
            if nxt_front is None or nxt_back is None:
                return None
            front, back = nxt_front, nxt_back
        return EncDpKey(i=len(prefix), r=r, order=order, p_f=front, p_b=back, anchor=anchor)

    # ----- complement-side continuations -----

    def y(self, back: int, anchor: int, remaining: int) -> int:
        """Continuations of the given length keeping every complement-side rotation above w"""
        if not 0 <= remaining <= self.size:
            raise InvalidWordError(f"Continuation length {remaining} outside [0, {self.size}]")
        return int(self.walks[remaining, back, anchor])

    def memo_sizes(self) -> Dict[str, int]:
        return {
            "c": self._states,
            "tail": len(self._tails),
            "y": int(np.count_nonzero(self.walks)),
        }


def y_enc(w: str, p_b: int, anchor: int, i: int, m: int, compare_length: Optional[int] = None) -> int:
    if i < 0 or not 0 <= p_b < m or not 0 <= anchor < m:
        raise InvalidWordError(f"Malformed continuation arguments p_b={p_b}, anchor={anchor}, i={i}")
    return EnclosingCounter(w, m, compare_length).y(p_b, anchor, i)


def c_size(w: str, key: EncDpKey, m: int, compare_length: Optional[int] = None) -> int:
    return EnclosingCounter(w, m, compare_length).c_size(key)


def gamma_size(w: str, m: int, r: int, compare_length: Optional[int] = None) -> int:
    if not 1 <= r <= m <= len(w):
        raise InvalidWordError(f"Need 1 <= r <= m <= |w|, got r={r}, m={m}, |w|={len(w)}")
    return EnclosingCounter(w, m, compare_length).gamma(r)


def en_size(w: str, m: int, compare_length: Optional[int] = None) -> int:
    """Words of length m whose necklace (repeated to compare_length) encloses w"""
    if not 1 <= m <= len(w):
        raise InvalidWordError(f"Length {m} outside [1, {len(w)}]")
    return EnclosingCounter(w, m, compare_length).en()


def rank_enclosing(w: str, m: int) -> int:
    """Unlabelled necklaces of length m that enclose w"""
    if not 1 <= m <= len(w):
        raise InvalidWordError(f"Length {m} outside [1, {len(w)}]")
    require_dp_reference(w)
    words: Dict[int, int] = {}

    def en(e: int) -> int:
        if e not in words:
            words[e] = en_size(w, e, m)
        return words[e]

    rank = 0
    for d in divisors(m):
        primitive = sum(mobius(d // e) * en(e) for e in divisors(d))
        rank += exact_divide(primitive, d, f"enclosing Lyndon words of length {d} around {w}")
    logger.debug(f"rank_enclosing({w}, {m}) = {rank}")
    return rank


def enclosing_memo_states(w: str, m: Optional[int] = None) -> Dict[str, int]:
    """Memo sizes of the gamma DP over every shift at length m"""
    counter = EnclosingCounter(w, m or len(w))
    counter.en()
    return counter.memo_sizes()
