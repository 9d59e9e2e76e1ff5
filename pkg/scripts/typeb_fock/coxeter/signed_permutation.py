"""
Знаковые перестановки - элементы гипероктаэдральной группы B(n)

Запись в одну строку: image[i-1] = sigma(i), sigma(-i) = -sigma(i).
Композиция справа налево: (sigma * tau)(x) = sigma(tau(x)).

Принципы SOLID:
- Single Responsibility: Только групповая структура и статистики инверсий
- Open/Closed: Действие на слова вынесено в отдельную функцию act_on_word
"""

from typing import Sequence, Tuple, TypeVar

from ..exceptions import DimensionMismatchError
from ..models.data_models import InversionStats

Letter = TypeVar("Letter")


class SignedPermutation:
    """
    Элемент группы B(n)

    Ответственность:
    - Валидация записи в одну строку
    - Вычисление sigma(x) для x из {±1..±n}
    - Композиция, обращение, текстовый вид "[2,-1]"

    Не отвечает за:
    - Перебор группы (см. group.py)
    - Действие на тензорные слова (см. act_on_word)
    """

    __slots__ = ("_image",)

    def __init__(self, image: Sequence[int]):
        image = tuple(int(v) for v in image)
        if not image:
            raise ValueError("Знаковая перестановка должна иметь n >= 1")
        if sorted(abs(v) for v in image) != list(range(1, len(image) + 1)):
            raise ValueError(f"Модули образов не образуют перестановку 1..{len(image)}: {list(image)}")
        self._image = image

    @property
    def n(self) -> int:
        return len(self._image)

    @property
    def image(self) -> Tuple[int, ...]:
        return self._image

    def __call__(self, x: int) -> int:
        if x == 0 or abs(x) > self.n:
            raise ValueError(f"Аргумент {x} вне {{±1..±{self.n}}}")
        return self._image[x - 1] if x > 0 else -self._image[-x - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.n
        for i, v in enumerate(self._image, 1):
            inv[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation(inv)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self._image, 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return self._image == other._image

    def __lt__(self, other: "SignedPermutation") -> bool:
        return self._image < other._image

    def __hash__(self) -> int:
        return hash(self._image)

    def to_text(self) -> str:
        return "[" + ",".join(str(v) for v in self._image) + "]"

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        """Разобрать "[2,-1]" """
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"Ожидалась запись вида [2,-1], получено {text!r}")
        try:
            return cls([int(tok) for tok in body[1:-1].split(",") if tok.strip()])
        except ValueError as e:
            raise ValueError(f"Некорректная знаковая перестановка {text!r}: {e}")

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"SignedPermutation({self.to_text()})"


# ============================================================================
# Операции группы
# ============================================================================

def identity(n: int) -> SignedPermutation:
    return SignedPermutation(range(1, n + 1))


def generator(i: int, n: int) -> SignedPermutation:
    """
    Образующая pi_i группы B(n)

    pi_0: 1 -> -1; pi_i (i >= 1): i <-> i+1

    Raises:
        ValueError: если i вне [0, n-1]
    """
    if not 0 <= i <= n - 1:
        raise ValueError(f"Индекс образующей {i} вне диапазона [0, {n - 1}]")
    image = list(range(1, n + 1))
    if i == 0:
        image[0] = -1
    else:
        image[i - 1], image[i] = image[i], image[i - 1]
    return SignedPermutation(image)


def compose(sigma: SignedPermutation, tau: SignedPermutation) -> SignedPermutation:
    """(sigma o tau)(x) = sigma(tau(x))"""
    if sigma.n != tau.n:
        raise DimensionMismatchError(f"Композиция элементов B({sigma.n}) и B({tau.n})")
    return SignedPermutation(sigma(t) for t in tau.image)


def inverse(sigma: SignedPermutation) -> SignedPermutation:
    return sigma.inverse()


def word_to_permutation(word: Sequence[int], n: int) -> SignedPermutation:
    """Значение слова pi_{w1} pi_{w2} ... pi_{wk} (вычисляется справа налево)"""
    result = identity(n)
    for i in word:
        result = compose(result, generator(i, n))
    return result


def inversion_stats(sigma: SignedPermutation) -> InversionStats:
    """
    ninv = #{i : sigma(i) < 0}
    pinv = #{i < j : sigma(i) > sigma(j)} + #{i < j : sigma(i) + sigma(j) < 0}
    """
    s = sigma.image
    ninv = sum(1 for v in s if v < 0)
    pinv = 0
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            pinv += (s[i] > s[j]) + (s[i] + s[j] < 0)
    return InversionStats(ninv=ninv, pinv=pinv)


def position_index(label: int, n: int) -> int:
    """Индекс позиции с меткой label в слове длины 2n (метки n̄..1̄,1..n)"""
    if label == 0 or abs(label) > n:
        raise ValueError(f"Метка позиции {label} вне {{±1..±{n}}}")
    return n + label if label < 0 else n + label - 1


def act_on_word(sigma: SignedPermutation, word: Sequence[Letter]) -> Tuple[Letter, ...]:
    """
    Действие sigma на базисное слово y_n̄ ⊗ ... ⊗ y_1̄ ⊗ y_1 ⊗ ... ⊗ y_n

    На позиции k результата стоит буква входа с позиции sigma^{-1}(k).

    Raises:
        DimensionMismatchError: если длина слова не равна 2n
    """
    n = sigma.n
    if len(word) != 2 * n:
        raise DimensionMismatchError(f"Длина слова {len(word)} не равна 2n = {2 * n}")
    out = [None] * (2 * n)
    for label in range(1, n + 1):
        target = sigma(label)
        out[position_index(target, n)] = word[position_index(label, n)]
        out[position_index(-target, n)] = word[position_index(-label, n)]
    return tuple(out)
