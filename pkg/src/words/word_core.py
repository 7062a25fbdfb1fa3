"""
Binary word primitives: cross-length order, rotation, complement, period,
cyclic subwords, canonical forms and necklace predicates.

Words are plain ``str`` values over the symbols ``"0"`` and ``"1"``, most
significant symbol first. Rotations are offsets normalized modulo the word
length, 0 being the identity.
"""
import logging
from typing import Optional

from src.errors import InvalidWordError

logger = logging.getLogger(__name__)

SYMBOLS = "01"
_FLIP = str.maketrans("01", "10")


def parse_word(text: str) -> str:
    """Validate a '0'/'1' string and return it as a word"""
    word = text.strip()
    if not word:
        raise InvalidWordError("Word must contain at least one symbol")
    bad = set(word) - set(SYMBOLS)
    if bad:
        raise InvalidWordError(f"Word {text!r} contains non-binary symbols: {''.join(sorted(bad))}")
    return word


def lex_less(u: str, v: str) -> bool:
    """
    Strict order on words of any length.

    Equal lengths compare lexicographically. Otherwise u^|v| is compared with
    v^|u| and an exact tie is broken in favour of the shorter word.
    """
    if len(u) == len(v):
        return u < v
    left, right = u * len(v), v * len(u)
    if left != right:
        return left < right
    return len(u) < len(v)


def rotate(w: str, r: int) -> str:
    """Cyclic left shift of w by r positions"""
    shift = r % len(w)
    return w[shift:] + w[:shift]


def complement(w: str) -> str:
    """Swap every 0 with 1 and vice versa"""
    return w.translate(_FLIP)


def flip(symbol: str) -> str:
    return "1" if symbol == "0" else "0"


def least_rotation(w: str) -> int:
    """Offset of the lexicographically least rotation (Booth's algorithm)"""
    doubled = w + w
    failure = [-1] * len(doubled)
    best = 0
    for j in range(1, len(doubled)):
        symbol = doubled[j]
        i = failure[j - best - 1]
        while i != -1 and symbol != doubled[best + i + 1]:
            if symbol < doubled[best + i + 1]:
                best = j - i - 1
            i = failure[i]
        if symbol != doubled[best + i + 1]:
            if symbol < doubled[best]:
                best = j
            failure[j - best] = -1
        else:
            failure[j - best] = i + 1
    return best % len(w)


def canonical(w: str) -> str:
    """Canonical representative of the necklace of w"""
    return rotate(w, least_rotation(w))


def canonical_unlabelled(w: str) -> str:
    """Canonical representative of the unlabelled necklace of w"""
    return min(canonical(w), canonical(complement(w)))


def period(w: str) -> int:
    """Length of the shortest u with u^t = w"""
    return (w + w).find(w, 1)


def subword(w: str, i: int, length: int) -> str:
    """Cyclic slice of w of the given length starting at 1-based position i"""
    n = len(w)
    if not 1 <= i <= n:
        raise InvalidWordError(f"Start index {i} outside [1, {n}]")
    if not 1 <= length <= n:
        raise InvalidWordError(f"Subword length {length} outside [1, {n}]")
    return (w + w)[i - 1:i - 1 + length]


def is_necklace(w: str) -> bool:
    return w == canonical(w)


def is_lyndon(w: str) -> bool:
    return is_necklace(w) and period(w) == len(w)


def is_canonical_unlabelled(w: str) -> bool:
    return w == canonical_unlabelled(w)


def min_antisymmetry_rotation(w: str) -> Optional[int]:
    """
    Smallest r in [1, n] with rotate(w, r) == complement(w), or None.

    Whenever such an r exists the period of w is exactly 2r.
    """
    target = complement(w)
    for r in range(1, len(w) + 1):
        if rotate(w, r) == target:
            if period(w) != 2 * r:
                raise AssertionError(f"Antisymmetry rotation {r} of {w} does not match its period {period(w)}")
            return r
    return None


def next_necklace(x: str) -> str:
    """
    Smallest necklace of length |x| that is not smaller than x.

    Finds the smallest prenecklace at or above x, then walks the FKM
    successor until the Lyndon prefix length divides the word length.
    """
    n = len(x)
    symbols = list(x)
    lyndon = 1
    stop = n
    for i in range(1, n):
        if symbols[i] < symbols[i - lyndon]:
            stop = i
            break
        if symbols[i] > symbols[i - lyndon]:
            lyndon = i + 1

    if stop < n:
        # x[:stop] + "1" follows the periodic extension, which is the least prenecklace above x
        symbols = symbols[:stop]
        for i in range(stop, n):
            symbols.append(symbols[i - lyndon])

    while n % lyndon != 0:
        last_zero = "".join(symbols).rfind("0")
        symbols[last_zero] = "1"
        lyndon = last_zero + 1
        for i in range(lyndon, n):
            symbols[i] = symbols[i - lyndon]

    return "".join(symbols)
