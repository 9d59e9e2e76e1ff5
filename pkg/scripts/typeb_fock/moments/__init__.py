"""
Комбинаторная сторона: кумулянты, формула моментов, формула Вика
"""

from .cumulants import b_cumulant, chain_vector
from .formula import (
    MomentTerm,
    partition_cumulant,
    moment_terms,
    moment,
    moment_by,
    specialized_moment,
    cyclic_shift,
    trace_defect,
    random_problem,
)
from .wick import WickTerm, extended_tensor, wick_terms, wick_vector, operator_word_vector

__all__ = [
    "b_cumulant",
    "chain_vector",
    "MomentTerm",
    "partition_cumulant",
    "moment_terms",
    "moment",
    "moment_by",
    "specialized_moment",
    "cyclic_shift",
    "trace_defect",
    "random_problem",
    "WickTerm",
    "extended_tensor",
    "wick_terms",
    "wick_vector",
    "operator_word_vector",
]
