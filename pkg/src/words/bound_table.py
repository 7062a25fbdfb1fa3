"""
Bounding subwords of a reference word and the WX extension table.

A word u of length l is *strictly bounded* by the cyclic subword s of the
reference word w when s is the largest length-l subword below u and u is
not itself a subword. The WX table maps (s, x) to the strict bound of u:x
for any u strictly bounded by s, so DP states only ever carry subwords.
"""
import logging
from bisect import bisect_left
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from src.errors import ConventionError, InvalidWordError, MissingBoundError
from src.words.word_core import SYMBOLS

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubwordRef:
    """A cyclic subword of the reference word, keyed by its smallest 1-based start"""
    length: int
    start: int
    value: str

    def __str__(self) -> str:
        return self.value or "EMPTY"


EMPTY = SubwordRef(length=0, start=0, value="")


@dataclass(frozen=True)
class Bound:
    """
    Where a consumed prefix sits among the subwords of its length.

    ``exact`` means the prefix equals ``ref``. Otherwise ``ref`` is its strict
    bound, ``None`` meaning the prefix is below every subword of that length.
    """
    length: int
    ref: Optional[SubwordRef]
    exact: bool

    @property
    def value(self) -> Optional[str]:
        return None if self.ref is None else self.ref.value

    def below(self, subword_value: str) -> bool:
        """Whether a strictly bounded prefix is smaller than the given subword"""
        return self.ref is None or subword_value > self.ref.value

    def above(self, subword_value: str) -> bool:
        """Whether a strictly bounded prefix is larger than the given subword"""
        return self.ref is not None and subword_value <= self.ref.value


ROOT = Bound(length=0, ref=EMPTY, exact=True)


class SubwordIndex:
    """Sorted distinct cyclic subwords of w, per length"""

    def __init__(self, reference: str):
        if not reference:
            raise InvalidWordError("Reference word must be nonempty")
        self.reference = reference
        n = len(reference)
        doubled = reference + reference
        self._refs: List[Dict[str, SubwordRef]] = [{"": EMPTY}]
        self._sorted: List[List[str]] = [[""]]
        for length in range(1, n + 1):
            refs: Dict[str, SubwordRef] = {}
            for start in range(n):
                value = doubled[start:start + length]
                if value not in refs:
                    refs[value] = SubwordRef(length=length, start=start + 1, value=value)
            self._refs.append(refs)
            self._sorted.append(sorted(refs))

    def refs(self, length: int) -> List[SubwordRef]:
        return [self._refs[length][value] for value in self._sorted[length]]

    def find(self, value: str) -> Optional[SubwordRef]:
        """The SubwordRef equal to value, if value is a cyclic subword"""
        return self._refs[len(value)].get(value)

    def strict_bound(self, value: str) -> Optional[SubwordRef]:
        length = len(value)
        if length > len(self.reference):
            raise InvalidWordError(f"Word of length {length} is longer than reference word {self.reference}")
        if value in self._refs[length]:
            return None
        values = self._sorted[length]
        position = bisect_left(values, value)
        if position == 0:
            return None
        return self._refs[length][values[position - 1]]


def strict_bound(v: str, w: str) -> Optional[SubwordRef]:
    """Largest length-|v| subword of w strictly below v; None if v is a subword or below all of them"""
    return SubwordIndex(w).strict_bound(v)


class WxTable:
    """WX extension table for one reference word"""

    def __init__(self, index: SubwordIndex, entries: Dict[Tuple[SubwordRef, str], SubwordRef]):
        self.index = index
        self.reference = index.reference
        self.entries = entries

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Tuple[SubwordRef, str]]:
        return iter(self.entries)

    def advance(self, bound: Bound, symbol: str) -> Bound:
        """Bound of the prefix extended by one symbol"""
        length = bound.length + 1
        if bound.exact:
            extended = bound.ref.value + symbol
            ref = self.index.find(extended)
            if ref is not None:
                return Bound(length, ref, True)
            return Bound(length, self.index.strict_bound(extended), False)
        if bound.ref is None:
            return Bound(length, None, False)
        return Bound(length, wx_lookup(self, bound.ref, symbol), False)


def _successor(value: str) -> Optional[str]:
    """Next word of the same length in lexicographic order"""
    if "0" not in value:
        return None
    return format(int(value, 2) + 1, f"0{len(value)}b")


def build_wx(w: str) -> WxTable:
    """
    Build the WX table of w.

    The representative of the words strictly bounded by s is the
    lexicographic successor of s, provided it is not a subword itself.
    """
    index = SubwordIndex(w)
    entries: Dict[Tuple[SubwordRef, str], SubwordRef] = {}

    for symbol in SYMBOLS:
        bound = index.strict_bound(symbol)
        if bound is not None:
            entries[(EMPTY, symbol)] = bound

    for length in range(1, len(w)):
        for ref in index.refs(length):
            representative = _successor(ref.value)
            if representative is None or index.find(representative) is not None:
                continue
            for symbol in SYMBOLS:
                bound = index.strict_bound(representative + symbol)
                if bound is None:
                    raise ConventionError(f"No strict bound for {representative + symbol} in {w}")
                entries[(ref, symbol)] = bound

    logger.debug(f"Built WX table for {w}: {len(entries)} entries")
    return WxTable(index, entries)


def wx_lookup(table: WxTable, s: SubwordRef, x: str) -> SubwordRef:
    try:
        return table.entries[(s, x)]
    except KeyError:
        raise MissingBoundError(f"No WX entry for ({s}, {x}) in table of {table.reference}") from None


def dump_wx(table: WxTable) -> List[str]:
    """Text lines 'l start value x -> start' value'' sorted by key"""
    lines = []
    for (ref, symbol), target in sorted(
        table.entries.items(), key=lambda item: (item[0][0].length, item[0][0].value, item[0][1])
    ):
        lines.append(f"{ref.length} {ref.start} {ref} {symbol} -> {target.start} {target.value}")
    return lines


def wx_mismatches(table: WxTable, max_length: Optional[int] = None) -> List[Tuple[str, str, Optional[str], str]]:
    """
    Recompute every WX entry from all strictly bounded words.

    Returns (u, x, expected, stored) for each disagreement; exponential in the
    length, meant for small reference words.
    """
    index = table.index
    limit = len(table.reference) - 1 if max_length is None else max_length
    mismatches = []
    for length in range(1, limit + 1):
        for number in range(2 ** length):
            u = format(number, f"0{length}b")
            s = index.strict_bound(u)
            if s is None:
                continue
            for symbol in SYMBOLS:
                expected = index.strict_bound(u + symbol)
                stored = table.entries.get((s, symbol))
                if stored is None or expected != stored:
                    mismatches.append((u, symbol, None if expected is None else expected.value, str(stored)))
    return mismatches
