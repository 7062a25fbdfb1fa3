"""
Exhaustive ground truth for every set and rank at small lengths.

Everything here is written from the definitions using word_core only, so
it shares no code with the dynamic programs it checks.
"""
import json
import logging
from dataclasses import dataclass, field, asdict
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Set, Tuple

from config.settings import ORACLE_MAX_LENGTH, ORACLE_MAX_WORDS
from src.errors import InvalidWordError, OracleBoundError
from src.words.word_core import (
    canonical,
    canonical_unlabelled,
    complement,
    lex_less,
    period,
    rotate,
)

logger = logging.getLogger(__name__)

RANK_SELECTORS = ("necklace", "symmetric", "enclosing", "asymmetric", "unlabelled")
SET_KINDS = ("alpha", "beta", "gamma", "ra", "en", "A", "B", "C", "Y")


@dataclass
class ClassInfo:
    """One unlabelled class: representative, its two labelled necklaces and symmetry"""
    representative: str
    necklaces: Tuple[str, str]
    symmetric: bool
    period: int


@dataclass
class ClassTable:
    n: int
    classes: List[ClassInfo] = field(default_factory=list)

    @property
    def representatives(self) -> List[str]:
        return [info.representative for info in self.classes]

    def to_json_lines(self) -> List[str]:
        return [json.dumps(asdict(info)) for info in self.classes]


def _check_length(n: int, max_length: int) -> None:
    if n < 1:
        raise InvalidWordError(f"Length must be positive, got {n}")
    if n > max_length:
        raise OracleBoundError(f"Oracle enumeration of length {n} exceeds bound {max_length}")


def all_words(n: int) -> Iterator[str]:
    for number in range(2 ** n):
        yield format(number, f"0{n}b")


def enumerate_necklaces(n: int, max_length: int = ORACLE_MAX_LENGTH) -> List[str]:
    """Binary necklaces of length n in lexicographic order (FKM generation)"""
    _check_length(n, max_length)
    result = []
    symbols = [0] * (n + 1)

    def extend(t: int, p: int) -> None:
        if t > n:
            if n % p == 0:
                result.append("".join(str(s) for s in symbols[1:]))
            return
        symbols[t] = symbols[t - p]
        extend(t + 1, p)
        if symbols[t - p] == 0:
            symbols[t] = 1
            extend(t + 1, t)

    extend(1, 1)
    return result


@lru_cache(maxsize=None)
def _classes(n: int) -> Tuple[ClassInfo, ...]:
    grouped: Dict[str, ClassInfo] = {}
    for word in all_words(n):
        representative = canonical_unlabelled(word)
        if representative in grouped:
            continue
        pair = tuple(sorted((canonical(word), canonical(complement(word)))))
        grouped[representative] = ClassInfo(
            representative=representative,
            necklaces=pair,
            symmetric=pair[0] == pair[1],
            period=period(representative),
        )
    return tuple(grouped[key] for key in sorted(grouped))


def enumerate_classes(n: int, max_length: int = ORACLE_MAX_LENGTH) -> ClassTable:
    _check_length(n, max_length)
    table = ClassTable(n=n, classes=list(_classes(n)))
    logger.debug(f"Enumerated {len(table.classes)} unlabelled classes of length {n}")
    return table


def oracle_rank(w: str, m: int, which: str, max_length: int = ORACLE_MAX_LENGTH) -> int:
    """Definitional recount of one rank component for lengths m"""
    if which not in RANK_SELECTORS:
        raise InvalidWordError(f"Unknown rank selector {which!r}; expected one of {RANK_SELECTORS}")
    if which == "necklace":
        return sum(1 for u in enumerate_necklaces(m, max_length) if lex_less(u, w))

    count = 0
    for info in enumerate_classes(m, max_length).classes:
        low, high = info.necklaces
        if which == "unlabelled":
            count += lex_less(info.representative, w)
        elif which == "symmetric":
            count += info.symmetric and lex_less(low, w)
        elif which == "enclosing":
            count += not info.symmetric and lex_less(low, w) and lex_less(w, high)
        else:
            count += not info.symmetric and lex_less(high, w)
    return count


# ----- set transcriptions -----

def _repeat(word: str, compare_length: Optional[int]) -> str:
    return word * ((compare_length or len(word)) // len(word))


def _drops(word: str, shift: int, w: str, compare_length: Optional[int]) -> bool:
    return lex_less(_repeat(rotate(word, shift), compare_length), w)


def _first_drop(word: str, shifts, w: str, compare_length: Optional[int]) -> Optional[int]:
    return next((shift for shift in shifts if _drops(word, shift, w, compare_length)), None)


def _alpha(w: str, r: int, j: int, compare_length: Optional[int]) -> Set[str]:
    members = set()
    for a in all_words(r):
        word = a + complement(a)
        if _first_drop(word, range(1, r + 1), w, compare_length) == j:
            members.add(word)
    return members


def _second_half_clear(word: str, r: int, w: str, compare_length: Optional[int]) -> bool:
    return not any(_drops(word, shift, w, compare_length) for shift in range(r + 1, 2 * r + 1))


def _beta(w: str, r: int, j: int, compare_length: Optional[int]) -> Set[str]:
    return {word for word in _alpha(w, r, j, compare_length) if _second_half_clear(word, r, w, compare_length)}


def _ra(w: str, m: int, r: int) -> Set[str]:
    members = set()
    for v in all_words(m):
        if all(v[i] != v[(i + r) % m] for i in range(m)) and lex_less(canonical(v), w):
            members.add(v)
    return members


def _encloses(v: str, w: str, compare_length: Optional[int]) -> bool:
    repeated = _repeat(v, compare_length)
    return lex_less(canonical(repeated), w) and lex_less(w, canonical(complement(repeated)))


def _en(w: str, m: int, compare_length: Optional[int]) -> Set[str]:
    return {v for v in all_words(m) if _encloses(v, w, compare_length)}


def _gamma(w: str, m: int, r: int, compare_length: Optional[int]) -> Set[str]:
    return {
        v for v in _en(w, m, compare_length)
        if _first_drop(v, range(1, m + 1), w, compare_length) == r
    }


def oracle_set(kind: str, w: str, **params) -> Set[str]:
    """
    Literal member set of one of the counted sets.

    alpha/beta/A/B/Y: r, j (not for Y), compare_length; members are words a·S(a).
    ra: m, r. en: m, compare_length. gamma/C: m, r, compare_length.
    A/B/C restrict alpha/beta/gamma to members starting with ``prefix``;
    Y holds the words a·S(a) extending ``prefix`` whose rotations at shifts
    r+1..2r all stay at or above w.
    """
    if kind not in SET_KINDS:
        raise InvalidWordError(f"Unknown set kind {kind!r}; expected one of {SET_KINDS}")
    compare_length = params.get("compare_length")
    prefix = params.get("prefix", "")
    length = params.get("m") or params.get("r", 0)
    if 2 ** length > ORACLE_MAX_WORDS:
        raise OracleBoundError(f"Set {kind} over 2^{length} words exceeds the oracle bound")

    if kind in ("alpha", "A"):
        members = _alpha(w, params["r"], params["j"], compare_length)
    elif kind in ("beta", "B"):
        members = _beta(w, params["r"], params["j"], compare_length)
    elif kind == "Y":
        r = params["r"]
        members = {
            a + complement(a) for a in all_words(r)
            if _second_half_clear(a + complement(a), r, w, compare_length)
        }
    elif kind == "ra":
        members = _ra(w, params["m"], params["r"])
    elif kind == "en":
        members = _en(w, params["m"], compare_length)
    else:
        members = _gamma(w, params["m"], params["r"], compare_length)

    if kind in ("A", "B", "C", "Y"):
        members = {word for word in members if word.startswith(prefix)}
    return members
