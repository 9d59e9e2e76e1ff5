"""
Комбинаторная формула моментов и ее частные случаи

phi(B_n ... B_1) = sum_{pi in P^B(n)} alpha^{Na(pi)} q^{Rc(pi)} prod_{B-блоки} кумулянт

Принципы SOLID:
- Single Responsibility: Суммирование по разбиениям; операторы - в fock
- Open/Closed: Частные случаи суммируются по своим классам независимо
"""

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from ..algebra.poly import BivariatePoly
from ..config import DEFAULT_CONFIG, EngineConfig
from ..exceptions import CapExceededError, PreconditionError
from ..fock import vacuum_expectation_oracle
from ..models.data_models import (
    FactorSpec,
    MomentMethod,
    MomentProblem,
    PartitionClass,
    SpecializationMode,
    StatRecord,
)
from ..partitions import TypeBPartition, enumerate_partitions, outer_arcs, statistics
from .cumulants import b_cumulant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MomentTerm:
    """Вклад одного разбиения"""
    partition: TypeBPartition
    stats: StatRecord
    cumulant: Fraction

    @property
    def weight(self) -> BivariatePoly:
        na, rc = self.stats.exponent()
        return BivariatePoly.monomial(self.cumulant, na, rc)


def partition_cumulant(p: TypeBPartition, problem: MomentProblem) -> Fraction:
    """Произведение B-кумулянтов по всем B-блокам"""
    value = Fraction(1)
    for c in p.positive_chains():
        value *= b_cumulant(c, problem)
        if not value:
            break
    return value


def _check_cap(problem: MomentProblem, config: EngineConfig) -> None:
    if problem.n > config.partition_cap:
        raise CapExceededError(f"n = {problem.n} превышает лимит {config.partition_cap}")


def moment_terms(problem: MomentProblem, cls=PartitionClass.B, config: EngineConfig = DEFAULT_CONFIG,
                 include_zero: bool = False) -> List[MomentTerm]:
    """Разложение момента по разбиениям (по умолчанию без нулевых вкладов)"""
    _check_cap(problem, config)
    terms = []
    for p in enumerate_partitions(problem.n, cls, config):
        value = partition_cumulant(p, problem)
        if value or include_zero:
            terms.append(MomentTerm(partition=p, stats=statistics(p), cumulant=value))
    return terms


def _partitions_weight(problem: MomentProblem, partitions: Sequence[TypeBPartition]) -> BivariatePoly:
    total = BivariatePoly.zero()
    for p in partitions:
        value = partition_cumulant(p, problem)
        if value:
            na, rc = statistics(p).exponent()
            total = total + BivariatePoly.monomial(value, na, rc)
    return total


def _parallel_moment(problem: MomentProblem, config: EngineConfig) -> BivariatePoly:
    """Перечисление делится на config.workers частей; точная сумма от деления не зависит"""
    partitions = list(enumerate_partitions(problem.n, PartitionClass.B, config))
    chunks = [partitions[i::config.workers] for i in range(config.workers)]
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        parts = list(pool.map(_partitions_weight, [problem] * len(chunks), chunks))
    logger.debug(f"Момент n={problem.n}: {len(partitions)} разбиений на {config.workers} процессах")
    return sum(parts, BivariatePoly.zero())


def moment(problem: MomentProblem, config: EngineConfig = DEFAULT_CONFIG) -> BivariatePoly:
    """
    Момент по комбинаторной формуле

    При config.workers > 1 сумма по разбиениям считается в пуле процессов.

    Raises:
        CapExceededError: n больше config.partition_cap
        ValueError: config.workers < 1
    """
    if config.workers < 1:
        raise ValueError(f"workers должно быть >= 1, получено {config.workers}")
    if config.workers > 1:
        _check_cap(problem, config)
        return _parallel_moment(problem, config)
    total = BivariatePoly.zero()
    terms = moment_terms(problem, PartitionClass.B, config)
    for t in terms:
        total = total + t.weight
    logger.debug(f"Момент n={problem.n}: ненулевых разбиений {len(terms)}")
    return total


def moment_by(problem: MomentProblem, method=MomentMethod.COMBINATORIAL,
              config: EngineConfig = DEFAULT_CONFIG) -> BivariatePoly:
    """Момент выбранным путем (combinatorial или oracle)"""
    method = MomentMethod(method)
    if method is MomentMethod.ORACLE:
        return vacuum_expectation_oracle(problem.factors)
    if method is MomentMethod.COMBINATORIAL:
        return moment(problem, config)
    raise ValueError("Для method=both используйте VerificationPipeline")


# ============================================================================
# Частные случаи
# ============================================================================

def _is_zero_matrix(m) -> bool:
    return all(not c for row in m for c in row)


def _check_specialization(problem: MomentProblem, mode: SpecializationMode) -> None:
    if mode is SpecializationMode.GAUSSIAN:
        for i, f in enumerate(problem.factors, 1):
            if not (_is_zero_matrix(f.T_left) and _is_zero_matrix(f.T_right)):
                raise PreconditionError(f"gaussian: фактор {i} имеет T != 0")
            if f.lam_left or f.lam_right:
                raise PreconditionError(f"gaussian: фактор {i} имеет lambda != 0")
    elif mode is SpecializationMode.MEIXNER_Q0:
        for i, f in enumerate(problem.factors, 1):
            if not f.is_palindromic():
                raise PreconditionError(f"meixnerQ0: фактор {i} не палиндромный (x_left != x_right или T_left != T_right)")


def specialized_moment(problem: MomentProblem, mode, config: EngineConfig = DEFAULT_CONFIG) -> BivariatePoly:
    """
    typeA: sum_{P^A(n)} q^{Rc} R_pi  (= moment при alpha = 0)
    gaussian: sum_{P^B_2(n)} alpha^{Na} q^{Rc} prod <x_i, x_j>
    meixnerQ0: sum_{NC^A(n)} (1 + alpha)^{outer} R_pi  (= moment при q = 0)

    Raises:
        PreconditionError: данные не удовлетворяют условиям режима
    """
    mode = SpecializationMode(mode)
    _check_specialization(problem, mode)
    total = BivariatePoly.zero()
    if mode is SpecializationMode.TYPE_A:
        for t in moment_terms(problem, PartitionClass.A, config):
            total = total + BivariatePoly.monomial(t.cumulant, 0, t.stats.rc)
    elif mode is SpecializationMode.GAUSSIAN:
        for t in moment_terms(problem, PartitionClass.PAIR_B, config):
            total = total + t.weight
    else:
        one_plus_alpha = BivariatePoly.one() + BivariatePoly.alpha()
        for t in moment_terms(problem, PartitionClass.NC_A, config):
            total = total + one_plus_alpha ** len(outer_arcs(t.partition)) * t.cumulant
    return total


# ============================================================================
# След и случайные задачи
# ============================================================================

def cyclic_shift(problem: MomentProblem, shift: int = 1) -> MomentProblem:
    """B_n ... B_1 -> B_{n-s} ... B_1 B_n ... B_{n-s+1}"""
    n = problem.n
    s = shift % n
    order = list(range(n - s + 1, n + 1)) + list(range(1, n - s + 1))
    return problem.permuted(order)


def trace_defect(problem: MomentProblem, shift: int = 1, method=MomentMethod.COMBINATORIAL,
                 config: EngineConfig = DEFAULT_CONFIG) -> BivariatePoly:
    """phi(B_n ... B_1) - phi(циклический сдвиг слова)"""
    return moment_by(problem, method, config) - moment_by(cyclic_shift(problem, shift), method, config)


def _rand_rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 2))


def random_problem(n: int, d: int, rng: Optional[random.Random] = None, bound: int = 2,
                   gauge: bool = True, lam: bool = True, palindromic: bool = False) -> MomentProblem:
    """
    Случайная рациональная задача

    Args:
        gauge: случайные T (иначе нулевые матрицы)
        lam: случайные lambda (иначе нули)
        palindromic: x_left = x_right, T_left = T_right, lam_left = lam_right
    """
    rng = rng or random.Random(DEFAULT_CONFIG.seed)

    def vec():
        return [_rand_rational(rng, bound) for _ in range(d)]

    def mat():
        if not gauge:
            return [[0] * d for _ in range(d)]
        return [vec() for _ in range(d)]

    def scalar():
        return _rand_rational(rng, bound) if lam else Fraction(0)

    factors = []
    for _ in range(n):
        if palindromic:
            x, t, l = vec(), mat(), scalar()
            factors.append(FactorSpec(x, x, t, t, l, l))
        else:
            factors.append(FactorSpec(vec(), vec(), mat(), mat(), scalar(), scalar()))
    return MomentProblem(d, tuple(factors))
