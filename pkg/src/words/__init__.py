# Word primitives and bounding subwords
from .word_core import (
    canonical,
    canonical_unlabelled,
    complement,
    is_canonical_unlabelled,
    is_lyndon,
    is_necklace,
    lex_less,
    min_antisymmetry_rotation,
    next_necklace,
    parse_word,
    period,
    rotate,
    subword,
)
from .bound_table import EMPTY, ROOT, Bound, SubwordRef, WxTable, build_wx, strict_bound, wx_lookup
