"""
B-кумулянты

Для положительной цепочки (c_1, ..., c_k):
    <x_{-c_k}, T_{-c_{k-1}} ... T_{-c_2} x_{-c_1}> <x_{c_k}, T_{c_{k-1}} ... T_{c_2} x_{c_1}>
для синглетона (a): lam_{-a} lam_a.
Индекс j < 0 - левый член фактора |j|, j > 0 - правый.
"""

from fractions import Fraction
from typing import Sequence

from ..algebra.linear import VectorQ, dot, mat_vec
from ..models.data_models import MomentProblem
from ..partitions.arcs import BBlock


def _as_chain(block) -> tuple:
    if isinstance(block, BBlock):
        return block.positive_chain
    return tuple(sorted(block, key=abs))


def _check_indices(c: Sequence[int], problem: MomentProblem) -> None:
    for j in c:
        if j == 0 or abs(j) > problem.n:
            raise IndexError(f"Индекс {j} вне ±[1..{problem.n}]")


def chain_vector(c: Sequence[int], problem: MomentProblem, include_last: bool = False) -> VectorQ:
    """
    T_{c_{k-1}} ... T_{c_2} x_{c_1}; при include_last=True еще и T_{c_k}
    """
    v = problem.x(c[0])
    stop = len(c) if include_last else len(c) - 1
    for j in c[1:stop]:
        v = mat_vec(problem.T(j), v)
    return v


def b_cumulant(block, problem: MomentProblem) -> Fraction:
    """
    B-кумулянт блока

    Args:
        block: положительная цепочка (элементы в любом порядке) или BBlock

    Raises:
        IndexError: индекс вне ±[1..n]
    """
    c = _as_chain(block)
    _check_indices(c, problem)
    if len(c) == 1:
        return problem.lam(-c[0]) * problem.lam(c[0])
    mirrored = tuple(-j for j in c)
    left = dot(problem.x(mirrored[-1]), chain_vector(mirrored, problem))
    right = dot(problem.x(c[-1]), chain_vector(c, problem))
    return left * right
