# Ranking of plain, symmetric, enclosing and unlabelled necklaces
from .necklace_rank import count_lyndon, count_necklaces, rank_lyndon, rank_necklaces
from .symmetric_rank import (
    AntiperiodicCounter,
    SymDpKeySA,
    SymDpKeySB,
    alpha_size,
    beta_size,
    ra_size,
    rank_sym_lyndon,
    rank_sym_necklaces,
    sa,
    sb,
    symmetric_memo_states,
    y_sym,
)
from .enclosing_rank import (
    EncDpKey,
    EnclosingCounter,
    c_size,
    en_size,
    enclosing_memo_states,
    gamma_size,
    rank_enclosing,
    y_enc,
)
from .unlabelled_rank import (
    RankBreakdown,
    classes_below,
    count_unlabelled,
    count_unlabelled_lyndon,
    rank_unlabelled,
    rank_unlabelled_lyndon,
    unrank_unlabelled,
)
