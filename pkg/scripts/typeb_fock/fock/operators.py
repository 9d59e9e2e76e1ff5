"""
Операторы двойного пространства Фока типа B

- creation: b*(x ⊗ y) = l*(x) ⊗ r*(y), уровень n -> n+1
- annihilation: b(x ⊗ y) = r(x ⊗ y) R^(n), а также замкнутые формы p_q + alpha n_q
- gauge: p(T̄ ⊗ T) = p_0(T̄ ⊗ T) R^(n), а также r_q + alpha n_q^N
- poisson_apply: B = b* + b + p(T̄ ⊗ T) + lam_left lam_right
- vacuum_expectation_oracle: phi(B_n ... B_1) прямым применением к вакууму

Позиции слова уровня n: n̄, ..., 1̄, 1, ..., n (слева направо).

Принципы SOLID:
- Single Responsibility: Каждая функция реализует один оператор
- Open/Closed: Замкнутые формы - независимая вторая реализация для сверки
"""

import logging
from typing import List, Sequence, Tuple

from ..algebra.linear import MatrixQ, VectorQ, check_matrix, check_vector, mat_vec
from ..algebra.poly import BivariatePoly
from ..exceptions import DimensionMismatchError
from ..models.data_models import FactorSpec
from .symmetrizer import apply_R
from .vectors import FockVector, Word, expand_vector

logger = logging.getLogger(__name__)


def _check_operands(v: FockVector, *vectors: VectorQ) -> None:
    for x in vectors:
        check_vector(x, v.dimension, "вектор оператора")


def _matrix_columns(m: MatrixQ) -> List[Tuple[Tuple[int, object], ...]]:
    """Разложение T e_i по базису для каждого i (индексы с 1)"""
    d = len(m)
    cols = []
    for i in range(d):
        e = tuple(int(k == i) for k in range(d))
        cols.append(expand_vector(mat_vec(m, e)))
    return cols


def _pair(x_exp: dict, letter: int):
    """<x, e_letter>"""
    return x_exp.get(letter, 0)


# ============================================================================
# Рождение
# ============================================================================

def creation(x: VectorQ, y: VectorQ, v: FockVector) -> FockVector:
    """
    b*(x ⊗ y): слово w переходит в x ⊗ w ⊗ y

    Raises:
        DimensionMismatchError: размерности x, y и v не совпадают
    """
    _check_operands(v, x, y)
    xs, ys = expand_vector(x), expand_vector(y)

    def on_word(w: Word):
        return [((i,) + w + (j,), a * b) for i, a in xs for j, b in ys]

    return v.linear_map(on_word)


# ============================================================================
# Уничтожение
# ============================================================================

def free_annihilation(x: VectorQ, y: VectorQ, v: FockVector) -> FockVector:
    """r(x ⊗ y): спаривает x с самой левой буквой, y с самой правой; вакуум -> 0"""
    _check_operands(v, x, y)
    xd, yd = dict(expand_vector(x)), dict(expand_vector(y))

    def on_word(w: Word):
        if not w:
            return []
        return [(w[1:-1], _pair(xd, w[0]) * _pair(yd, w[-1]))]

    return v.linear_map(on_word)


def annihilation(x: VectorQ, y: VectorQ, v: FockVector) -> FockVector:
    """b(x ⊗ y) = r(x ⊗ y) R^(n)"""
    return free_annihilation(x, y, apply_R(v))


def _without(w: Word, k: int) -> Word:
    """Слово без позиций k̄ и k"""
    n = len(w) // 2
    return w[: n - k] + w[n - k + 1: n + k - 1] + w[n + k:]


def annihilation_closed_parts(x: VectorQ, y: VectorQ, v: FockVector) -> Tuple[FockVector, FockVector]:
    """
    Положительная и отрицательная части уничтожения

    p_q(x ⊗ y) eta = sum_k q^{n-k} <x, x_k̄> <y, x_k> eta \\ {k̄, k}
    n_q(x ⊗ y) eta = q^{n-1} sum_k q^{k-1} <x, x_k> <y, x_k̄> eta \\ {k̄, k}
    """
    _check_operands(v, x, y)
    xd, yd = dict(expand_vector(x)), dict(expand_vector(y))

    def positive(w: Word):
        n = len(w) // 2
        for k in range(1, n + 1):
            c = _pair(xd, w[n - k]) * _pair(yd, w[n + k - 1])
            yield _without(w, k), BivariatePoly.monomial(c, 0, n - k)

    def negative(w: Word):
        n = len(w) // 2
        for k in range(1, n + 1):
            c = _pair(xd, w[n + k - 1]) * _pair(yd, w[n - k])
            yield _without(w, k), BivariatePoly.monomial(c, 0, n - 1 + k - 1)

    return v.linear_map(positive), v.linear_map(negative)


def annihilation_closed(x: VectorQ, y: VectorQ, v: FockVector) -> FockVector:
    """p_q(x ⊗ y) + alpha n_q(x ⊗ y)"""
    p, n = annihilation_closed_parts(x, y, v)
    return p + n.scale(BivariatePoly.alpha())


# ============================================================================
# Калибровочный оператор
# ============================================================================

def _check_gauge(T_left: MatrixQ, T_right: MatrixQ, v: FockVector) -> None:
    check_matrix(T_left, v.dimension, "T_left")
    check_matrix(T_right, v.dimension, "T_right")


def free_gauge(T_left: MatrixQ, T_right: MatrixQ, v: FockVector) -> FockVector:
    """p_0(T̄ ⊗ T): T̄ на самой левой букве, T на самой правой; вакуум -> 0"""
    _check_gauge(T_left, T_right, v)
    left, right = _matrix_columns(T_left), _matrix_columns(T_right)

    def on_word(w: Word):
        if not w:
            return []
        inner = w[1:-1]
        return [((i,) + inner + (j,), a * b) for i, a in left[w[0] - 1] for j, b in right[w[-1] - 1]]

    return v.linear_map(on_word)


def gauge(T_left: MatrixQ, T_right: MatrixQ, v: FockVector) -> FockVector:
    """p(T̄ ⊗ T) = p_0(T̄ ⊗ T) R^(n)"""
    return free_gauge(T_left, T_right, apply_R(v))


def gauge_closed_parts(T_left: MatrixQ, T_right: MatrixQ, v: FockVector) -> Tuple[FockVector, FockVector]:
    """
    r_q^{T̄⊗T} eta = sum_k q^{n-k} T̄x_k̄ ⊗ (eta \\ {k̄, k}) ⊗ T x_k
    n_q^{N,T̄⊗T} eta = q^{n-1} sum_k q^{k-1} T̄x_k ⊗ (eta \\ {k̄, k}) ⊗ T x_k̄
    """
    _check_gauge(T_left, T_right, v)
    left, right = _matrix_columns(T_left), _matrix_columns(T_right)

    def emit(rest: Word, a_letter: int, b_letter: int, q_power: int):
        for i, a in left[a_letter - 1]:
            for j, b in right[b_letter - 1]:
                yield (i,) + rest + (j,), BivariatePoly.monomial(a * b, 0, q_power)

    def positive(w: Word):
        n = len(w) // 2
        for k in range(1, n + 1):
            yield from emit(_without(w, k), w[n - k], w[n + k - 1], n - k)

    def negative(w: Word):
        n = len(w) // 2
        for k in range(1, n + 1):
            yield from emit(_without(w, k), w[n + k - 1], w[n - k], n + k - 2)

    return v.linear_map(positive), v.linear_map(negative)


def gauge_closed(T_left: MatrixQ, T_right: MatrixQ, v: FockVector) -> FockVector:
    """r_q^{T̄⊗T} + alpha n_q^{N,T̄⊗T}"""
    r, n = gauge_closed_parts(T_left, T_right, v)
    return r + n.scale(BivariatePoly.alpha())


# ============================================================================
# Оператор Пуассона и оракул моментов
# ============================================================================

def poisson_apply(f: FactorSpec, v: FockVector) -> FockVector:
    """
    B^{lam_left, lam_right}(x_left ⊗ x_right) v

    Raises:
        DimensionMismatchError: размерность фактора не совпадает с v
    """
    if f.dimension != v.dimension:
        raise DimensionMismatchError(f"Фактор размерности {f.dimension} применяется к вектору размерности {v.dimension}")
    result = (
        creation(f.x_left, f.x_right, v)
        + annihilation(f.x_left, f.x_right, v)
        + gauge(f.T_left, f.T_right, v)
    )
    if f.lam_product:
        result = result + v.scale(f.lam_product)
    return result


def apply_factors(factors: Sequence[FactorSpec], v: FockVector = None, prune: bool = True) -> FockVector:
    """
    B_n ... B_1 v (factors[0] применяется первым)

    prune=True отбрасывает уровни, с которых оставшиеся факторы
    уже не могут вернуться в вакуум.
    """
    factors = list(factors)
    if not factors:
        raise ValueError("Нужен хотя бы один фактор")
    d = factors[0].dimension
    if any(f.dimension != d for f in factors):
        raise DimensionMismatchError("Факторы разной размерности")
    v = FockVector.vacuum(d) if v is None else v
    for step, f in enumerate(factors, 1):
        v = poisson_apply(f, v)
        if prune:
            v = v.truncate(len(factors) - step)
    return v


def vacuum_expectation_oracle(factors: Sequence[FactorSpec]) -> BivariatePoly:
    """phi(B_n ... B_1) = коэффициент вакуума в B_n ... B_1 Omega"""
    factors = list(factors)
    result = apply_factors(factors).vacuum_coefficient()
    logger.debug(f"Оракул: n={len(factors)}, термов={len(result)}")
    return result

