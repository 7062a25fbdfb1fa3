"""
Pending-tie scanning against a prefix of a necklace.

While a word is read left to right, the rotations that started inside it
and still agree with the reference prefix z are the suffixes of the text
that are prefixes of z. Only the longest one needs tracking: because w is a
necklace starting with 0, every shorter tied rotation behaves no worse than
the longest when the next symbol arrives.
"""
from typing import Iterator, List, Optional

from src.errors import NonCanonicalWordError
from src.words.word_core import is_necklace


def tie_is_below(w: str, length: int, compare_length: int) -> bool:
    """
    Outcome when a rotation of a length-``length`` word equals w[:length].

    Repeated to ``compare_length`` the rotation is below w unless it
    reproduces w exactly at w's own length.
    """
    if compare_length != len(w) or len(w) % length:
        return True
    return w != w[:length] * (len(w) // length)


def advance_pending(reference: str, pending: int, symbol: str) -> Optional[int]:
    """Longest tied suffix after reading symbol; None when a tied rotation drops below"""
    expected = reference[pending]
    if symbol == expected:
        return pending + 1
    if symbol > expected:
        return 0
    return None


def failure_table(reference: str) -> List[int]:
    """failure[p] = length of the longest proper border of reference[:p]"""
    failure = [0] * (len(reference) + 1)
    k = 0
    for p in range(1, len(reference)):
        while k and reference[p] != reference[k]:
            k = failure[k]
        if reference[p] == reference[k]:
            k += 1
        failure[p + 1] = k
    return failure


def border_chain(failure: List[int], pending: int) -> Iterator[int]:
    """pending and all its nonzero borders, longest first"""
    while pending:
        yield pending
        pending = failure[pending]


def drops_below(rotation: str, reference: str, tie_below: bool) -> bool:
    """Whether a rotation of the same length as reference compares below it"""
    return rotation < reference or (rotation == reference and tie_below)


def require_dp_reference(w: str) -> None:
    """The scanners need w to be a necklace starting with 0"""
    if not w or w[0] != "0" or not is_necklace(w):
        raise NonCanonicalWordError(f"{w!r} is not a necklace starting with 0")
