"""
Рациональные числа произвольной точности

Тонкая обертка над fractions.Fraction: приведение входных данных,
текстовая сериализация "p/q" (без "/1") и разбор строк.
Числа с плавающей точкой в точный слой не допускаются.
"""

from fractions import Fraction
from numbers import Integral
from typing import Union

RationalLike = Union[int, Fraction, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(value: RationalLike) -> Fraction:
    """
    Привести значение к Fraction

    Args:
        value: int, Fraction или строка вида "3", "-2/5", "0.25"

    Returns:
        Fraction в несократимом виде (знаменатель > 0)

    Raises:
        TypeError: для float и прочих типов
        ValueError: для нераспознаваемой строки
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool не является рациональным числом")
    if isinstance(value, Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"Ожидалось рациональное значение, получено {type(value).__name__}: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Разобрать "p/q", целое или конечную десятичную запись"""
    cleaned = text.strip()
    if not cleaned:
        raise ValueError("Пустая строка вместо рационального числа")
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"Не удалось разобрать рациональное число: {text!r}")


def format_rational(value: Fraction) -> str:
    """Каноническая запись: "p/q", либо "p" при q = 1"""
    value = as_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
