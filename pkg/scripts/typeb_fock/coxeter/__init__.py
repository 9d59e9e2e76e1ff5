"""
Гипероктаэдральная группа B(n): знаковые перестановки, образующие, статистики
"""

from .signed_permutation import (
    SignedPermutation,
    identity,
    generator,
    compose,
    inverse,
    word_to_permutation,
    inversion_stats,
    position_index,
    act_on_word,
)
from .group import (
    enumerate_group,
    group_order,
    reduced_word_table,
    length_generating_function,
    length_generating_product,
)

__all__ = [
    "SignedPermutation",
    "identity",
    "generator",
    "compose",
    "inverse",
    "word_to_permutation",
    "inversion_stats",
    "position_index",
    "act_on_word",
    "enumerate_group",
    "group_order",
    "reduced_word_table",
    "length_generating_function",
    "length_generating_product",
]
