"""
Формула Вика на уровне векторов

b^{eps(n)} ... b^{eps(1)} Omega = sum_{pi in P^B_{E;eps}(n)}
    alpha^{Na} q^{Rc + MinMax} R_pi R̂_pi

R_pi - произведение кумулянтов регулярных блоков, R̂_pi - тензор из
расширенных блоков: правые ноги T_{c_k} ... T_{c_2} x_{c_1} идут изнутри
наружу по возрастанию |c_k|, левые ноги - зеркально.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from ..algebra.poly import BivariatePoly
from ..config import DEFAULT_CONFIG, EngineConfig
from ..exceptions import CapExceededError, PreconditionError
from ..fock import FockVector, annihilation_closed, creation, gauge_closed
from ..models.data_models import MomentProblem, OperatorKind
from ..partitions import ExtendedTypeBPartition, enumerate_extended, extended_statistics
from .cumulants import b_cumulant, chain_vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WickTerm:
    """Слагаемое формулы Вика"""
    partition: ExtendedTypeBPartition
    coefficient: BivariatePoly
    state: FockVector


def _normalize_eps(eps: Sequence, n: int) -> List[OperatorKind]:
    kinds = [OperatorKind.parse(e) if isinstance(e, str) else OperatorKind(e) for e in eps]
    if len(kinds) != n:
        raise PreconditionError(f"Длина eps = {len(kinds)} не равна числу факторов {n}")
    return kinds


def extended_tensor(p: ExtendedTypeBPartition, problem: MomentProblem) -> FockVector:
    """R̂_pi: вакуум, если расширенных блоков нет"""
    chains = p.extended_chains()
    if not chains:
        return FockVector.vacuum(problem.dimension)
    right = [chain_vector(c, problem, include_last=True) for c in chains]
    left = [chain_vector(tuple(-j for j in c), problem, include_last=True) for c in reversed(chains)]
    return FockVector.tensor(left + right)


def wick_terms(eps: Sequence, problem: MomentProblem, config: EngineConfig = DEFAULT_CONFIG) -> List[WickTerm]:
    """
    Ненулевые слагаемые формулы Вика

    Raises:
        CapExceededError: n больше config.wick_cap
    """
    n = problem.n
    if n > config.wick_cap:
        raise CapExceededError(f"Формула Вика ограничена n <= {config.wick_cap}, получено {n}")
    kinds = _normalize_eps(eps, n)
    terms = []
    for p in enumerate_extended(n, kinds, config):
        value = Fraction(1)
        for c in p.regular_chains():
            value *= b_cumulant(c, problem)
        if not value:
            continue
        st = extended_statistics(p)
        coeff = BivariatePoly.monomial(value, st.na, st.rc + st.minmax)
        terms.append(WickTerm(partition=p, coefficient=coeff, state=extended_tensor(p, problem)))
    return terms


def wick_vector(eps: Sequence, problem: MomentProblem, config: EngineConfig = DEFAULT_CONFIG) -> FockVector:
    total = FockVector.zero(problem.dimension)
    for t in wick_terms(eps, problem, config):
        total = total + t.state.scale(t.coefficient)
    return total


def operator_word_vector(eps: Sequence, problem: MomentProblem) -> FockVector:
    """
    b^{eps(n)} ... b^{eps(1)} Omega прямым применением операторов

    create - рождение, act - p_q + alpha n_q, gauge - r_q + alpha n_q^N
    """
    kinds = _normalize_eps(eps, problem.n)
    v = FockVector.vacuum(problem.dimension)
    for i, kind in enumerate(kinds, 1):
        f = problem.factor(i)
        if kind is OperatorKind.CREATE:
            v = creation(f.x_left, f.x_right, v)
        elif kind is OperatorKind.ACT:
            v = annihilation_closed(f.x_left, f.x_right, v)
        else:
            v = gauge_closed(f.T_left, f.T_right, v)
    return v
