"""
Векторы усеченного двойного пространства Фока типа B

FockVector - конечная линейная комбинация базисных слов четной длины 2n
над d-мерным пространством с коэффициентами BivariatePoly.
Пустое слово - вакуум Omega ⊗ Omega.
"""

from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

from ..algebra.linear import VectorQ
from ..algebra.poly import BivariatePoly
from ..algebra.rational import RationalLike, as_fraction
from ..exceptions import DimensionMismatchError

Word = Tuple[int, ...]
Coefficient = Union[BivariatePoly, RationalLike]


class FockVector:
    """
    Неизменяемый вектор пространства Фока

    Ответственность:
    - Хранение слов и коэффициентов без нулей
    - Линейные операции (+, -, умножение на многочлен)
    - Покомпонентная работа по уровням n (длина слова 2n)
    - Линейное продолжение отображений, заданных на базисных словах

    Не отвечает за:
    - Деформированное скалярное произведение (см. symmetrizer.py)
    - Операторы рождения/уничтожения (см. operators.py)
    """

    __slots__ = ("_d", "_terms")

    def __init__(self, d: int, terms: Mapping[Sequence[int], Coefficient] = None):
        if d < 1:
            raise ValueError(f"Размерность пространства должна быть >= 1, получено {d}")
        self._d = d
        cleaned: Dict[Word, BivariatePoly] = {}
        for word, c in (terms or {}).items():
            word = tuple(int(i) for i in word)
            self._check_word(word)
            c = BivariatePoly.coerce(c)
            if c:
                total = cleaned.get(word, BivariatePoly.zero()) + c
                if total:
                    cleaned[word] = total
                else:
                    cleaned.pop(word, None)
        self._terms = cleaned

    def _check_word(self, word: Word) -> None:
        if len(word) % 2:
            raise DimensionMismatchError(f"Слово нечетной длины: {word}")
        for i in word:
            if not 1 <= i <= self._d:
                raise DimensionMismatchError(f"Индекс {i} вне [1..{self._d}] в слове {word}")

    @classmethod
    def _raw(cls, d: int, terms: Dict[Word, BivariatePoly]) -> "FockVector":
        obj = cls.__new__(cls)
        obj._d = d
        obj._terms = terms
        return obj

    # ========================================================================
    # Конструкторы
    # ========================================================================

    @classmethod
    def zero(cls, d: int) -> "FockVector":
        return cls._raw(d, {})

    @classmethod
    def vacuum(cls, d: int) -> "FockVector":
        return cls._raw(d, {(): BivariatePoly.one()})

    @classmethod
    def basis(cls, d: int, word: Sequence[int]) -> "FockVector":
        return cls(d, {tuple(word): 1})

    @classmethod
    def tensor(cls, vectors: Sequence[VectorQ], coefficient: Coefficient = 1) -> "FockVector":
        """
        Разложить простой тензор v_1 ⊗ ... ⊗ v_{2n} по базисным словам

        Raises:
            DimensionMismatchError: нечетное число множителей или разные размерности
        """
        if not vectors:
            raise ValueError("Для вакуума используйте FockVector.vacuum(d)")
        d = len(vectors[0])
        if any(len(v) != d for v in vectors):
            raise DimensionMismatchError("Множители тензора разной размерности")
        partial: Dict[Word, Fraction] = {(): Fraction(1)}
        for v in vectors:
            expansion = expand_vector(v)
            partial = {w + (i,): c * a for w, c in partial.items() for i, a in expansion}
        coeff = BivariatePoly.coerce(coefficient)
        return cls(d, {w: coeff.scale(c) for w, c in partial.items()})

    # ========================================================================
    # Доступ
    # ========================================================================

    @property
    def dimension(self) -> int:
        return self._d

    @property
    def terms(self) -> Dict[Word, BivariatePoly]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Word, BivariatePoly]]:
        """Слова в порядке (уровень, лексикографически)"""
        for w in sorted(self._terms, key=lambda w: (len(w), w)):
            yield w, self._terms[w]

    def coefficient(self, word: Sequence[int]) -> BivariatePoly:
        return self._terms.get(tuple(word), BivariatePoly.zero())

    def vacuum_coefficient(self) -> BivariatePoly:
        return self.coefficient(())

    def max_level(self) -> int:
        return max((len(w) // 2 for w in self._terms), default=0)

    def level(self, n: int) -> "FockVector":
        """Компонента уровня n"""
        return FockVector._raw(self._d, {w: c for w, c in self._terms.items() if len(w) == 2 * n})

    def truncate(self, max_level: int) -> "FockVector":
        """Отбросить уровни выше max_level"""
        return FockVector._raw(self._d, {w: c for w, c in self._terms.items() if len(w) <= 2 * max_level})

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # ========================================================================
    # Линейная структура
    # ========================================================================

    def _check_same_space(self, other: "FockVector") -> None:
        if self._d != other._d:
            raise DimensionMismatchError(f"Векторы над пространствами размерности {self._d} и {other._d}")

    def __add__(self, other: "FockVector") -> "FockVector":
        if not isinstance(other, FockVector):
            return NotImplemented
        self._check_same_space(other)
        res = dict(self._terms)
        for w, c in other._terms.items():
            s = res.get(w, BivariatePoly.zero()) + c
            if s:
                res[w] = s
            else:
                res.pop(w, None)
        return FockVector._raw(self._d, res)

    def __neg__(self) -> "FockVector":
        return self.scale(-1)

    def __sub__(self, other: "FockVector") -> "FockVector":
        if not isinstance(other, FockVector):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Coefficient) -> "FockVector":
        c = BivariatePoly.coerce(c)
        if not c:
            return FockVector.zero(self._d)
        return FockVector._raw(self._d, {w: v * c for w, v in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self._d == other._d and self._terms == other._terms

    __hash__ = None

    def linear_map(self, on_word: Callable[[Word], Iterable[Tuple[Word, Coefficient]]]) -> "FockVector":
        """
        Линейное продолжение отображения, заданного на базисных словах

        Args:
            on_word: слово -> пары (слово-образ, коэффициент)
        """
        acc: Dict[Word, BivariatePoly] = {}
        for w, c in self._terms.items():
            for image, k in on_word(w):
                k = BivariatePoly.coerce(k)
                if not k:
                    continue
                acc[image] = acc.get(image, BivariatePoly.zero()) + c * k
        return FockVector._raw(self._d, {w: c for w, c in acc.items() if c})

    # ========================================================================
    # Подстановки и вывод
    # ========================================================================

    def evaluate(self, alpha: RationalLike, q: RationalLike) -> "FockVector":
        """Подставить рациональные alpha, q во все коэффициенты"""
        return FockVector(self._d, {w: c.evaluate(alpha, q) for w, c in self._terms.items()})

    def specialize(self, alpha: RationalLike = None, q: RationalLike = None) -> "FockVector":
        return FockVector(self._d, {w: c.specialize(alpha, q) for w, c in self._terms.items()})

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.items():
            label = "Ω" if not w else "e(" + ",".join(str(i) for i in w) + ")"
            parts.append(f"({c.to_text()})·{label}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FockVector(d={self._d}, terms={len(self._terms)}, max_level={self.max_level()})"


def expand_vector(v: VectorQ) -> Tuple[Tuple[int, Fraction], ...]:
    """Ненулевые координаты (индекс с 1, значение)"""
    return tuple((i, as_fraction(a)) for i, a in enumerate(v, 1) if a)


def free_inner_product(u: FockVector, v: FockVector) -> BivariatePoly:
    """Свободное спаривание <u, v>_{0,0}: базисные слова ортонормированы"""
    u._check_same_space(v)
    small, large = (u, v) if len(u) <= len(v) else (v, u)
    total = BivariatePoly.zero()
    for w, c in small._terms.items():
        other = large._terms.get(w)
        if other is not None:
            total = total + c * other
    return total
