"""
Схема файла задачи (JSON)

ProblemFile сериализует MomentProblem: рациональные числа хранятся
строками "p/q", чтобы в данные не попадала плавающая точка.
"""

import json
import logging
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from ..algebra.rational import format_rational, parse_rational
from ..exceptions import ProblemFileError
from .data_models import FactorSpec, MomentProblem

logger = logging.getLogger(__name__)

RationalText = Union[str, int]


def _normalize(value: RationalText) -> str:
    if isinstance(value, bool):
        raise ValueError("bool не является рациональным числом")
    return format_rational(parse_rational(str(value)))


class FactorModel(BaseModel):
    """Один фактор B^{lam_left, lam_right}(x_left ⊗ x_right) с символами T_left, T_right"""
    x_left: List[RationalText]
    x_right: List[RationalText]
    T_left: List[List[RationalText]]
    T_right: List[List[RationalText]]
    lam_left: RationalText = "0"
    lam_right: RationalText = "0"

    @field_validator("x_left", "x_right", mode="after")
    @classmethod
    def _vector(cls, v):
        return [_normalize(c) for c in v]

    @field_validator("T_left", "T_right", mode="after")
    @classmethod
    def _matrix(cls, m):
        return [[_normalize(c) for c in row] for row in m]

    @field_validator("lam_left", "lam_right", mode="after")
    @classmethod
    def _scalar(cls, v):
        return _normalize(v)


class ProblemFile(BaseModel):
    """
    Файл задачи о смешанном моменте

    factors[0] - самый правый оператор (индекс 1).
    """
    dimension: int = Field(ge=1)
    factors: List[FactorModel] = Field(min_length=1)
    description: Optional[str] = None

    @model_validator(mode="after")
    def _check_shapes(self):
        d = self.dimension
        for idx, f in enumerate(self.factors, 1):
            for name in ("x_left", "x_right"):
                if len(getattr(f, name)) != d:
                    raise ValueError(f"Фактор {idx}: длина {name} = {len(getattr(f, name))}, ожидалось {d}")
            for name in ("T_left", "T_right"):
                m = getattr(f, name)
                if len(m) != d or any(len(row) != d for row in m):
                    raise ValueError(f"Фактор {idx}: {name} должна быть квадратной {d}x{d}")
        return self

    # ========================================================================
    # Преобразования
    # ========================================================================

    def to_problem(self) -> MomentProblem:
        factors = tuple(
            FactorSpec(
                x_left=f.x_left,
                x_right=f.x_right,
                T_left=f.T_left,
                T_right=f.T_right,
                lam_left=f.lam_left,
                lam_right=f.lam_right,
            )
            for f in self.factors
        )
        return MomentProblem(self.dimension, factors)

    @classmethod
    def from_problem(cls, problem: MomentProblem, description: str = None) -> "ProblemFile":
        def vec(v):
            return [format_rational(c) for c in v]

        def mat(m):
            return [vec(row) for row in m]

        return cls(
            dimension=problem.dimension,
            description=description,
            factors=[
                FactorModel(
                    x_left=vec(f.x_left),
                    x_right=vec(f.x_right),
                    T_left=mat(f.T_left),
                    T_right=mat(f.T_right),
                    lam_left=format_rational(f.lam_left),
                    lam_right=format_rational(f.lam_right),
                )
                for f in problem.factors
            ],
        )

    # ========================================================================
    # Ввод/вывод
    # ========================================================================

    @classmethod
    def loads(cls, text: str) -> "ProblemFile":
        """
        Разобрать JSON

        Raises:
            ProblemFileError: некорректный JSON или нарушение схемы
        """
        try:
            return cls.model_validate_json(text)
        except ValidationError as e:
            raise ProblemFileError(f"Файл задачи не соответствует схеме: {e}") from e
        except ValueError as e:
            raise ProblemFileError(f"Некорректный JSON файла задачи: {e}") from e

    @classmethod
    def load(cls, path: Union[str, Path]) -> "ProblemFile":
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ProblemFileError(f"Не удалось прочитать {path}: {e}") from e
        logger.debug(f"Загрузка задачи: {path}")
        return cls.loads(text)

    def dumps(self) -> str:
        return json.dumps(self.model_dump(exclude_none=True), ensure_ascii=False, indent=2)

    def dump(self, path: Union[str, Path]) -> None:
        Path(path).write_text(self.dumps() + "\n", encoding="utf-8")
