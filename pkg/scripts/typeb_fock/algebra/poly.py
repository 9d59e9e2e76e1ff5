"""
Разреженные многочлены от двух переменных (alpha, q) над Q

BivariatePoly - универсальный тип коэффициентов: скалярные произведения,
веса alpha^{Na} q^{Rc}, моменты и коэффициенты векторов Фока.

Принципы:
- Неизменяемое значение: операции возвращают новые объекты
- Нулевые коэффициенты не хранятся
- Детерминированный текстовый вид (градуированный лексикографический порядок)
"""

import re
from fractions import Fraction
from typing import Dict, Iterator, Tuple, Union

from .rational import RationalLike, as_fraction, format_rational

Exponent = Tuple[int, int]
Scalar = Union[int, Fraction]

_TERM_RE = re.compile(r"^([+-]?\d+(?:/\d+)?)((?:\*[aq](?:\^\d+)?)*)$")


class BivariatePoly:
    """
    Точный многочлен sum c_{ij} alpha^i q^j

    Ответственность:
    - Кольцевые операции (+, -, *, **), умножение на скаляр
    - Подстановка рациональных alpha, q (гомоморфизм вычисления)
    - Частичная специализация одной переменной
    - Сериализация "c*a^i*q^j + ..." и обратный разбор

    Не отвечает за:
    - Факторизацию, деление, базисы Гребнера
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[Exponent, RationalLike] = None):
        cleaned: Dict[Exponent, Fraction] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"Отрицательная степень в многочлене: ({i}, {j})")
            c = as_fraction(c)
            if c:
                cleaned[(int(i), int(j))] = cleaned.get((int(i), int(j)), Fraction(0)) + c
        self._terms = {e: c for e, c in cleaned.items() if c}
        self._hash = None

    # ========================================================================
    # Конструкторы
    # ========================================================================

    @classmethod
    def _raw(cls, terms: Dict[Exponent, Fraction]) -> "BivariatePoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "BivariatePoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "BivariatePoly":
        return cls._raw({(0, 0): Fraction(1)})

    @classmethod
    def constant(cls, c: RationalLike) -> "BivariatePoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: RationalLike = 1, alpha_power: int = 0, q_power: int = 0) -> "BivariatePoly":
        """c * alpha^alpha_power * q^q_power"""
        return cls({(alpha_power, q_power): c})

    @classmethod
    def alpha(cls) -> "BivariatePoly":
        return cls.monomial(1, 1, 0)

    @classmethod
    def q(cls) -> "BivariatePoly":
        return cls.monomial(1, 0, 1)

    @classmethod
    def coerce(cls, value: Union["BivariatePoly", RationalLike]) -> "BivariatePoly":
        if isinstance(value, BivariatePoly):
            return value
        return cls.constant(value)

    # ========================================================================
    # Доступ
    # ========================================================================

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        """Копия словаря термов"""
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Термы в каноническом порядке"""
        for e in sorted(self._terms, key=_grlex_key):
            yield e, self._terms[e]

    def coefficient(self, alpha_power: int, q_power: int) -> Fraction:
        return self._terms.get((alpha_power, q_power), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    def degree(self) -> Tuple[int, int]:
        """Максимальные степени по alpha и по q"""
        if not self._terms:
            return (0, 0)
        return (max(i for i, _ in self._terms), max(j for _, j in self._terms))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # ========================================================================
    # Арифметика
    # ========================================================================

    def __add__(self, other) -> "BivariatePoly":
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        res = dict(self._terms)
        for e, c in other._terms.items():
            s = res.get(e, 0) + c
            if s:
                res[e] = s
            else:
                res.pop(e, None)
        return BivariatePoly._raw(res)

    __radd__ = __add__

    def __neg__(self) -> "BivariatePoly":
        return BivariatePoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "BivariatePoly":
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "BivariatePoly":
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "BivariatePoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        res: Dict[Exponent, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                res[e] = res.get(e, 0) + c1 * c2
        return BivariatePoly._raw({e: c for e, c in res.items() if c})

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "BivariatePoly":
        c = as_fraction(c)
        if not c:
            return BivariatePoly.zero()
        return BivariatePoly._raw({e: v * c for e, v in self._terms.items()})

    def shift(self, alpha_power: int = 0, q_power: int = 0) -> "BivariatePoly":
        """Умножение на alpha^a q^b"""
        return BivariatePoly._raw({(i + alpha_power, j + q_power): c for (i, j), c in self._terms.items()})

    def __pow__(self, k: int) -> "BivariatePoly":
        if k < 0:
            raise ValueError("Отрицательная степень многочлена не определена")
        result, base = BivariatePoly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ========================================================================
    # Подстановки
    # ========================================================================

    def evaluate(self, alpha: RationalLike, q: RationalLike) -> Fraction:
        """
        Подставить рациональные alpha и q

        Args:
            alpha: значение alpha
            q: значение q (q = 0 допустимо: 0^0 = 1)

        Returns:
            Fraction
        """
        a, b = as_fraction(alpha), as_fraction(q)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * a ** i * b ** j
        return total

    def specialize(self, alpha: RationalLike = None, q: RationalLike = None) -> "BivariatePoly":
        """Подставить только одну (или обе) переменные, оставив многочлен"""
        res: Dict[Exponent, Fraction] = {}
        a = None if alpha is None else as_fraction(alpha)
        b = None if q is None else as_fraction(q)
        for (i, j), c in self._terms.items():
            if a is not None:
                c, i = c * a ** i, 0
            if b is not None:
                c, j = c * b ** j, 0
            res[(i, j)] = res.get((i, j), 0) + c
        return BivariatePoly._raw({e: c for e, c in res.items() if c})

    def to_float(self, alpha: float, q: float) -> float:
        return float(sum(float(c) * alpha ** i * q ** j for (i, j), c in self._terms.items()))

    # ========================================================================
    # Сериализация
    # ========================================================================

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_format_term(c, i, j) for (i, j), c in self.items())

    @classmethod
    def parse(cls, text: str) -> "BivariatePoly":
        """
        Разобрать каноническую запись "c*a^i*q^j + ..."

        Raises:
            ValueError: при нераспознанном терме
        """
        text = text.strip()
        if text == "0":
            return cls.zero()
        terms: Dict[Exponent, Fraction] = {}
        for chunk in text.split(" + "):
            m = _TERM_RE.match(chunk.replace(" ", ""))
            if not m:
                raise ValueError(f"Нераспознанный терм многочлена: {chunk!r}")
            coeff = Fraction(m.group(1))
            i = j = 0
            for factor in filter(None, m.group(2).split("*")):
                var, _, power = factor.partition("^")
                if var == "a":
                    i += int(power or 1)
                else:
                    j += int(power or 1)
            terms[(i, j)] = terms.get((i, j), 0) + coeff
        return cls(terms)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"BivariatePoly({self.to_text()!r})"


def _grlex_key(e: Exponent) -> Tuple[int, int, int]:
    i, j = e
    return (-(i + j), -i, -j)


def _format_term(c: Fraction, i: int, j: int) -> str:
    parts = [format_rational(c)]
    if i:
        parts.append("a" if i == 1 else f"a^{i}")
    if j:
        parts.append("q" if j == 1 else f"q^{j}")
    return "*".join(parts)


def _coerce_or_none(value):
    if isinstance(value, BivariatePoly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return BivariatePoly.constant(value)
    return None


def poly_mul(p: BivariatePoly, r: BivariatePoly) -> BivariatePoly:
    """Точное произведение"""
    return p * r


def poly_eval(p: BivariatePoly, alpha: RationalLike, q: RationalLike) -> Fraction:
    """Гомоморфизм подстановки"""
    return p.evaluate(alpha, q)


ALPHA = BivariatePoly.alpha()
Q = BivariatePoly.q()
