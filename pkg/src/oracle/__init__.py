"""Brute-force ground truth for small lengths"""
from .brute_force import (
    RANK_SELECTORS,
    SET_KINDS,
    ClassInfo,
    ClassTable,
    enumerate_classes,
    enumerate_necklaces,
    oracle_rank,
    oracle_set,
)
