"""
Точная линейная алгебра малой размерности

VectorQ и MatrixQ - кортежи Fraction; операции нужны для скалярных
произведений <x, T...T y> в кумулянтах и для действия калибровочных матриц.
"""

from fractions import Fraction
from typing import Iterable, Sequence, Tuple

import numpy as np

from ..exceptions import DimensionMismatchError
from .rational import RationalLike, as_fraction

VectorQ = Tuple[Fraction, ...]
MatrixQ = Tuple[Tuple[Fraction, ...], ...]


def vector(values: Iterable[RationalLike]) -> VectorQ:
    return tuple(as_fraction(v) for v in values)


def matrix(rows: Iterable[Iterable[RationalLike]]) -> MatrixQ:
    """
    Квадратная рациональная матрица

    Raises:
        DimensionMismatchError: если строки разной длины или матрица не квадратная
    """
    result = tuple(vector(row) for row in rows)
    if any(len(row) != len(result) for row in result):
        raise DimensionMismatchError(f"Матрица должна быть квадратной, размеры строк: {[len(r) for r in result]}")
    return result


def zero_vector(d: int) -> VectorQ:
    return tuple(Fraction(0) for _ in range(d))


def basis_vector(d: int, i: int) -> VectorQ:
    """Единичный вектор e_i (i с нуля)"""
    return tuple(Fraction(int(k == i)) for k in range(d))


def identity_matrix(d: int) -> MatrixQ:
    return tuple(basis_vector(d, i) for i in range(d))


def check_vector(v: Sequence, d: int, name: str = "вектор") -> None:
    if len(v) != d:
        raise DimensionMismatchError(f"{name}: ожидалась размерность {d}, получено {len(v)}")


def check_matrix(m: Sequence[Sequence], d: int, name: str = "матрица") -> None:
    if len(m) != d or any(len(row) != d for row in m):
        raise DimensionMismatchError(f"{name}: ожидалась матрица {d}x{d}")


def dot(u: VectorQ, v: VectorQ) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatchError(f"Скалярное произведение векторов размерностей {len(u)} и {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def mat_vec(m: MatrixQ, v: VectorQ) -> VectorQ:
    if len(m) != len(v):
        raise DimensionMismatchError(f"Матрица {len(m)}x{len(m)} и вектор размерности {len(v)}")
    return tuple(dot(row, v) for row in m)


def transpose(m: MatrixQ) -> MatrixQ:
    return tuple(zip(*m)) if m else ()


def to_numpy(values) -> np.ndarray:
    """Вектор или матрица Fraction -> float64 (только для численного слоя)"""
    if len(values) and isinstance(values[0], (tuple, list)):
        return np.array([[float(x) for x in row] for row in values], dtype=float)
    return np.array([float(x) for x in values], dtype=float)
