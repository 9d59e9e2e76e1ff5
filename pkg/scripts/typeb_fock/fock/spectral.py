"""
Численные проверки: спектр симметризатора и нормы операторов

Плотные матрицы уровня n строятся в базисе слов длины 2n
(d^{2n} элементов, лексикографический порядок). Действие элемента B(n)
реализовано транспозицией осей тензора numpy, P^(n) собирается через
разложение (I ⊗ P^(n-1) ⊗ I) R^(n).
"""

import logging
import math
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

from ..algebra.linear import to_numpy
from ..config import DEFAULT_CONFIG, EngineConfig
from ..coxeter import SignedPermutation, position_index
from ..exceptions import CapExceededError, DimensionMismatchError, NumericalSingularityError
from ..models.data_models import NormRegion
from .symmetrizer import r_terms

logger = logging.getLogger(__name__)

KERNEL_TOL = 1e-10


def _check_cap(n: int, d: int, config: EngineConfig) -> int:
    size = d ** (2 * n)
    if size > config.dense_basis_cap:
        raise CapExceededError(
            f"Размер базиса d^(2n) = {d}^{2 * n} = {size} превышает лимит {config.dense_basis_cap}"
        )
    return size


def _axes(sigma: SignedPermutation, ndim: int) -> Tuple[int, ...]:
    """Перестановка осей, реализующая act_on_word на первых 2n осях"""
    n = sigma.n
    axes = [0] * (2 * n)
    for label in range(1, n + 1):
        target = sigma(label)
        axes[position_index(target, n)] = position_index(label, n)
        axes[position_index(-target, n)] = position_index(-label, n)
    return tuple(axes) + tuple(range(2 * n, ndim))


def _apply_R_tensor(t: np.ndarray, n: int, alpha: float, q: float) -> np.ndarray:
    out = np.zeros_like(t)
    for sigma, coeff in r_terms(n):
        c = coeff.to_float(alpha, q)
        if c:
            out += c * np.transpose(t, _axes(sigma, t.ndim))
    return out


def _apply_P_tensor(t: np.ndarray, n: int, alpha: float, q: float) -> np.ndarray:
    """P^(n) на первых 2n осях тензора (остальные оси - пакет)"""
    if n == 0:
        return t
    u = _apply_R_tensor(t, n, alpha, q)
    if n == 1:
        return u
    last = 2 * n - 1
    inner = np.moveaxis(u, [0, last], [-2, -1])
    inner = _apply_P_tensor(inner, n - 1, alpha, q)
    return np.moveaxis(inner, [-2, -1], [0, last])


def _level_operator(n: int, d: int, apply) -> np.ndarray:
    size = d ** (2 * n)
    basis = np.eye(size).reshape((d,) * (2 * n) + (size,))
    return np.ascontiguousarray(apply(basis).reshape(size, size))


# ============================================================================
# Матрицы R^(n) и P^(n)
# ============================================================================

def r_matrix(n: int, d: int, alpha: float, q: float, config: EngineConfig = DEFAULT_CONFIG) -> np.ndarray:
    _check_cap(n, d, config)
    if n == 0:
        return np.ones((1, 1))
    return _level_operator(n, d, lambda t: _apply_R_tensor(t, n, alpha, q))


def symmetrizer_matrix(n: int, d: int, alpha: float, q: float, config: EngineConfig = DEFAULT_CONFIG) -> np.ndarray:
    """
    Матрица Грама <e_u, e_v>_{alpha,q} = (P^(n))_{uv} уровня n

    Raises:
        CapExceededError: если d^{2n} больше config.dense_basis_cap
    """
    _check_cap(n, d, config)
    if n == 0:
        return np.ones((1, 1))
    return _level_operator(n, d, lambda t: _apply_P_tensor(t, n, alpha, q))


def symmetrizer_spectrum(n: int, d: int, alpha: float, q: float,
                         config: EngineConfig = DEFAULT_CONFIG) -> Tuple[float, bool]:
    """
    Минимальное собственное число P^(n) и признак вырожденности

    Returns:
        (min_eigenvalue, det_zero), det_zero = min |lambda| < 1e-10
    """
    gram = symmetrizer_matrix(n, d, alpha, q, config)
    eig = linalg.eigvalsh(gram)
    min_eig = float(eig[0])
    det_zero = bool(np.min(np.abs(eig)) < KERNEL_TOL)
    logger.debug(f"Спектр P^({n}), d={d}, (alpha, q)=({alpha}, {q}): min={min_eig:.3e}, вырожден={det_zero}")
    return min_eig, det_zero


# ============================================================================
# Нормы R^(n) и P^(n) в свободном скалярном произведении
# ============================================================================

def q_number_float(n: int, q: float) -> float:
    return float(sum(q ** k for k in range(n)))


def r_norm(n: int, d: int, alpha: float, q: float, config: EngineConfig = DEFAULT_CONFIG) -> float:
    """||R^(n)||_{0,0} - наибольшее сингулярное число"""
    return float(np.linalg.norm(r_matrix(n, d, alpha, q, config), 2))


def r_norm_bound(n: int, alpha: float, q: float) -> float:
    """(1 + |alpha| |q|^{n-1}) [n]_{|q|}"""
    return (1 + abs(alpha) * abs(q) ** (n - 1)) * q_number_float(n, abs(q))


def symmetrizer_norm(n: int, d: int, alpha: float, q: float, config: EngineConfig = DEFAULT_CONFIG) -> float:
    return float(np.linalg.norm(symmetrizer_matrix(n, d, alpha, q, config), 2))


def symmetrizer_norm_bound(n: int, alpha: float, q: float) -> float:
    """prod_{i=1}^{n} (1 + |alpha| |q|^{i-1}) [i]_{|q|}"""
    return float(np.prod([r_norm_bound(i, alpha, q) for i in range(1, n + 1)])) if n else 1.0


# ============================================================================
# Нормы операторов в деформированном скалярном произведении
# ============================================================================

def _generalized_max(a: np.ndarray, gram: np.ndarray, level: int) -> float:
    """max lambda: a v = lambda G v"""
    try:
        eig = linalg.eigh(a, gram, eigvals_only=True)
    except linalg.LinAlgError as e:
        raise NumericalSingularityError(
            f"Матрица Грама уровня {level} вырождена (параметры близки к ядру симметризатора): {e}"
        ) from e
    return float(max(eig[-1], 0.0))


class _GramCache:
    """Матрицы Грама по уровням для фиксированных (d, alpha, q)"""

    def __init__(self, d: int, alpha: float, q: float, config: EngineConfig):
        self.d, self.alpha, self.q, self.config = d, alpha, q, config
        self._cache: Dict[int, np.ndarray] = {}

    def __getitem__(self, n: int) -> np.ndarray:
        if n not in self._cache:
            self._cache[n] = symmetrizer_matrix(n, self.d, self.alpha, self.q, self.config)
        return self._cache[n]


def creation_matrix(x: np.ndarray, y: np.ndarray, n: int) -> np.ndarray:
    """b*(x ⊗ y) из уровня n в уровень n+1: w -> x ⊗ w ⊗ y"""
    d = len(x)
    size = d ** (2 * n)
    return np.kron(x.reshape(d, 1), np.kron(np.eye(size), y.reshape(d, 1)))


def creation_norm(x: Sequence, y: Sequence, alpha: float, q: float, max_level: int,
                  config: EngineConfig = DEFAULT_CONFIG) -> float:
    """
    Норма b*(x ⊗ y), суженного на уровни 0..max_level-1, в <.,.>_{alpha,q}

    На уровне n решается обобщенная задача C^T G_{n+1} C v = lambda G_n v;
    результат монотонно не убывает по max_level.

    Raises:
        NumericalSingularityError: вырожденная матрица Грама
        CapExceededError: уровень max_level не помещается в лимит
    """
    if max_level < 1:
        raise ValueError(f"max_level должен быть >= 1, получено {max_level}")
    xv, yv = to_numpy(x), to_numpy(y)
    if xv.shape != yv.shape:
        raise DimensionMismatchError(f"Размерности x и y: {xv.shape} и {yv.shape}")
    d = len(xv)
    _check_cap(max_level, d, config)
    grams = _GramCache(d, alpha, q, config)
    best = 0.0
    for n in range(max_level):
        c = creation_matrix(xv, yv, n)
        value = _generalized_max(c.T @ grams[n + 1] @ c, grams[n], n)
        best = max(best, value)
        logger.debug(f"||b*|| на уровне {n}: {math.sqrt(value):.10f}")
    return math.sqrt(best)


def gauge_matrix(T_left: np.ndarray, T_right: np.ndarray, n: int, alpha: float, q: float,
                 config: EngineConfig = DEFAULT_CONFIG) -> np.ndarray:
    """p_0(T̄ ⊗ T) R^(n) на уровне n >= 1"""
    d = T_left.shape[0]
    inner = np.eye(d ** (2 * n - 2))
    p0 = np.kron(T_left, np.kron(inner, T_right))
    return p0 @ r_matrix(n, d, alpha, q, config)


def gauge_norm(T_left: Sequence, T_right: Sequence, alpha: float, q: float, max_level: int,
               config: EngineConfig = DEFAULT_CONFIG) -> float:
    """Норма p(T̄ ⊗ T) на уровнях 1..max_level в <.,.>_{alpha,q}"""
    if max_level < 1:
        raise ValueError(f"max_level должен быть >= 1, получено {max_level}")
    tl, tr = to_numpy(T_left), to_numpy(T_right)
    if tl.shape != tr.shape or tl.ndim != 2 or tl.shape[0] != tl.shape[1]:
        raise DimensionMismatchError(f"Матрицы T̄, T должны быть квадратными одного размера: {tl.shape}, {tr.shape}")
    d = tl.shape[0]
    _check_cap(max_level, d, config)
    grams = _GramCache(d, alpha, q, config)
    best = 0.0
    for n in range(1, max_level + 1):
        a = gauge_matrix(tl, tr, n, alpha, q, config)
        best = max(best, _generalized_max(a.T @ grams[n] @ a, grams[n], n))
    return math.sqrt(best)


def gauge_norm_bound(T_left: Sequence, T_right: Sequence, alpha: float, q: float) -> float:
    """(1 + |alpha|) max{1, 1/(1-|q|)} ||T̄|| ||T||"""
    tl, tr = to_numpy(T_left), to_numpy(T_right)
    return (1 + abs(alpha)) * max(1.0, 1.0 / (1 - abs(q))) * float(np.linalg.norm(tl, 2) * np.linalg.norm(tr, 2))


def classify_region(alpha: float, q: float) -> NormRegion:
    if 0 <= alpha <= 1 and -1 < q <= 0:
        return NormRegion.A
    if -1 <= alpha < 0 and -1 < q <= 0:
        return NormRegion.B
    if abs(alpha) <= q < 1:
        return NormRegion.C
    return NormRegion.OTHER


def creation_norm_bounds(x: Sequence, y: Sequence, alpha: float, q: float) -> Tuple[NormRegion, float, float]:
    """
    Область параметров и пара (нижняя, верхняя) оценок ||b*(x ⊗ y)||

    A: точное значение sqrt(||x||^2 ||y||^2 + alpha <x,y>^2)
    B: [||x|| ||y|| / sqrt(1-q), ||x|| ||y||]
    C: точное значение ||x|| ||y|| / sqrt(1-q)
    иначе: [||x|| ||y|| / sqrt(1-q), sqrt((1+|alpha|)/(1-q)) ||x|| ||y||]
    """
    if not -1 < q < 1:
        raise ValueError(f"Оценки нормы определены для |q| < 1, получено q={q}")
    xv, yv = to_numpy(x), to_numpy(y)
    nx, ny = float(np.linalg.norm(xv)), float(np.linalg.norm(yv))
    region = classify_region(alpha, q)
    scaled = nx * ny / math.sqrt(1 - q)
    if region is NormRegion.A:
        value = math.sqrt(nx ** 2 * ny ** 2 + alpha * float(xv @ yv) ** 2)
        return region, value, value
    if region is NormRegion.B:
        return region, scaled, nx * ny
    if region is NormRegion.C:
        return region, scaled, scaled
    return region, scaled, math.sqrt((1 + abs(alpha)) / (1 - q)) * nx * ny
