"""
Data Models для typeb_fock

Общие перечисления и записи данных, которыми обмениваются модули:
классы разбиений, виды операторов, статистики, задача о моменте,
параметры Якоби и отчет CLI.

Принципы SOLID:
- Single Responsibility: Каждая модель отвечает за свой тип данных
- Open/Closed: Новые классы разбиений и режимы добавляются в перечисления
"""

from dataclasses import dataclass, field, asdict
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from ..algebra.linear import MatrixQ, VectorQ, check_matrix, check_vector, vector, matrix
from ..algebra.rational import as_fraction
from ..exceptions import DimensionMismatchError, PreconditionError


# ============================================================================
# Enums для типизации
# ============================================================================

class PartitionClass(str, Enum):
    """Классы разбиений типа B"""
    B = "B"                        # все разбиения типа B
    A = "A"                        # только положительные дуги
    PAIR_B = "pairB"               # все блоки - пары
    NO_SINGLETON_B = "noSingletonB"
    NC_B = "ncB"                   # без пересечений (Rc = 0)
    NC_A = "ncA"
    B12 = "B12"                    # блоки размера 1 или 2


class OperatorKind(str, Enum):
    """Буквы слова Вика: рождение (*), уничтожение (1), калибровка (E)"""
    CREATE = "create"
    ACT = "act"
    GAUGE = "gauge"

    @classmethod
    def parse(cls, token: str) -> "OperatorKind":
        """Принимает имя ('create') или символ ('*', '1', 'E')"""
        token = token.strip()
        symbols = {"*": cls.CREATE, "1": cls.ACT, "E": cls.GAUGE, "e": cls.GAUGE}
        if token in symbols:
            return symbols[token]
        try:
            return cls(token.lower())
        except ValueError:
            raise ValueError(f"Неизвестный вид оператора: {token!r} (ожидалось create/act/gauge или */1/E)")

    @property
    def symbol(self) -> str:
        return {"create": "*", "act": "1", "gauge": "E"}[self.value]


class InnerProductMode(str, Enum):
    FREE = "free"
    DEFORMED = "deformed"


class MomentMethod(str, Enum):
    COMBINATORIAL = "combinatorial"
    ORACLE = "oracle"
    BOTH = "both"


class SpecializationMode(str, Enum):
    """Частные случаи формулы моментов"""
    TYPE_A = "typeA"           # alpha = 0
    GAUSSIAN = "gaussian"      # T = 0, lambda = 0
    MEIXNER_Q0 = "meixnerQ0"   # q = 0, палиндромные факторы


class NormRegion(str, Enum):
    """Области параметров (alpha, q) с известной нормой оператора рождения"""
    A = "A"          # [0,1] x (-1,0]
    B = "B"          # [-1,0) x (-1,0]
    C = "C"          # |alpha| <= q < 1
    OTHER = "other"


class Verdict(str, Enum):
    EQUAL = "equal"
    MISMATCH = "mismatch"


# ============================================================================
# Статистики
# ============================================================================

@dataclass(frozen=True)
class InversionStats:
    """Отрицательные (ninv = l1) и положительные (pinv = l2) инверсии"""
    ninv: int
    pinv: int

    @property
    def length(self) -> int:
        return self.ninv + self.pinv


@dataclass(frozen=True)
class StatRecord:
    """
    Статистики разбиения типа B

    na - отрицательные B-дуги, rc - ограниченные пересечения,
    cs - накрытия B-синглетонов, minmax - накрытия крайних элементов
    расширенных блоков (только для расширенных разбиений)
    """
    na: int
    rc: int
    cs: int
    minmax: Optional[int] = None

    def exponent(self) -> Tuple[int, int]:
        """Показатели (alpha, q) в формуле моментов"""
        return (self.na, self.rc)


# ============================================================================
# Задача о смешанном моменте
# ============================================================================

@dataclass(frozen=True)
class FactorSpec:
    """
    Один оператор Пуассона B^{lam_left, lam_right}(x_left ⊗ x_right)

    T_left = T̄_i действует на левой половине тензора, T_right = T_i на правой.
    """
    x_left: VectorQ
    x_right: VectorQ
    T_left: MatrixQ
    T_right: MatrixQ
    lam_left: Fraction = Fraction(0)
    lam_right: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "x_left", vector(self.x_left))
        object.__setattr__(self, "x_right", vector(self.x_right))
        object.__setattr__(self, "T_left", matrix(self.T_left))
        object.__setattr__(self, "T_right", matrix(self.T_right))
        object.__setattr__(self, "lam_left", as_fraction(self.lam_left))
        object.__setattr__(self, "lam_right", as_fraction(self.lam_right))
        d = len(self.x_left)
        check_vector(self.x_right, d, "x_right")
        check_matrix(self.T_left, d, "T_left")
        check_matrix(self.T_right, d, "T_right")

    @property
    def dimension(self) -> int:
        return len(self.x_left)

    @property
    def lam_product(self) -> Fraction:
        return self.lam_left * self.lam_right

    def is_palindromic(self) -> bool:
        """x_left = x_right и T_left = T_right"""
        return self.x_left == self.x_right and self.T_left == self.T_right


@dataclass(frozen=True)
class MomentProblem:
    """
    phi(B(x_n̄ ⊗ x_n) ... B(x_1̄ ⊗ x_1))

    factors[0] - фактор с индексом 1 (самый правый оператор).
    Индекс j < 0 обозначает левый член фактора |j|, j > 0 - правый.
    """
    dimension: int
    factors: Tuple[FactorSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise PreconditionError("Задача о моменте должна содержать хотя бы один фактор")
        for idx, f in enumerate(self.factors, 1):
            if f.dimension != self.dimension:
                raise DimensionMismatchError(
                    f"Фактор {idx}: размерность {f.dimension}, ожидалась {self.dimension}"
                )

    @property
    def n(self) -> int:
        return len(self.factors)

    def factor(self, i: int) -> FactorSpec:
        """Фактор по индексу 1..n"""
        if not 1 <= abs(i) <= self.n:
            raise IndexError(f"Индекс фактора {i} вне диапазона ±[1..{self.n}]")
        return self.factors[abs(i) - 1]

    def x(self, j: int) -> VectorQ:
        f = self.factor(j)
        return f.x_left if j < 0 else f.x_right

    def T(self, j: int) -> MatrixQ:
        f = self.factor(j)
        return f.T_left if j < 0 else f.T_right

    def lam(self, j: int) -> Fraction:
        f = self.factor(j)
        return f.lam_left if j < 0 else f.lam_right

    def permuted(self, order: List[int]) -> "MomentProblem":
        """Новая задача с факторами в порядке order (индексы 1..n)"""
        return MomentProblem(self.dimension, tuple(self.factor(i) for i in order))


# ============================================================================
# Ортогональные многочлены
# ============================================================================

@dataclass(frozen=True)
class JacobiParams:
    """Параметры Якоби: beta_0 = 0, beta_n = gamma_{n-1} = [n]_q (1 + alpha q^{n-1})"""
    alpha: Fraction
    q: Fraction
    beta: Tuple[Fraction, ...]
    gamma: Tuple[Fraction, ...]


# ============================================================================
# Отчет CLI
# ============================================================================

@dataclass
class Report:
    """Результат команды CLI"""
    command: str
    payload: Dict[str, Any] = field(default_factory=dict)
    verdict: Optional[Verdict] = None
    diff: Optional[str] = None
    seconds: float = 0.0

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        """Словарь для JSON; время выполнения только при timing=True"""
        data = asdict(self)
        data["verdict"] = self.verdict.value if self.verdict else None
        if not timing:
            del data["seconds"]
        return data
