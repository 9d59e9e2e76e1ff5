"""
Конфигурация вычислительного ядра

Все лимиты и численные параметры по умолчанию собраны в одном месте.
Значения можно переопределить переменными окружения TYPEB_*
(например TYPEB_PARTITION_CAP=7) или флагами CLI.
"""

import os
import logging
from dataclasses import dataclass, fields, replace
from typing import Any, Dict

logger = logging.getLogger(__name__)

ENV_PREFIX = "TYPEB_"


@dataclass(frozen=True)
class EngineConfig:
    """
    Параметры движка

    Ответственность:
    - Лимиты перебора (разбиения, слова Вика, плотные матрицы)
    - Численные параметры цепной дроби и обращения Стилтьеса
    - Формат CSV и seed для случайных задач
    - Число процессов для суммы по разбиениям

    Не отвечает за:
    - Разбор аргументов командной строки (см. utils/typeb_cli.py)
    """
    partition_cap: int = 6
    wick_cap: int = 3
    dense_basis_cap: int = 20000
    cf_depth: int = 200
    stieltjes_eps: float = 1e-6
    endpoint_margin: float = 0.05
    csv_digits: int = 12
    seed: int = 20240101
    workers: int = 1

    @classmethod
    def from_env(cls, environ: Dict[str, str] = None) -> "EngineConfig":
        """
        Собрать конфигурацию из переменных окружения

        Args:
            environ: словарь окружения (по умолчанию os.environ)

        Returns:
            EngineConfig с переопределенными полями

        Raises:
            ValueError: если значение переменной не приводится к типу поля
        """
        environ = os.environ if environ is None else environ
        overrides: Dict[str, Any] = {}
        for f in fields(cls):
            key = ENV_PREFIX + f.name.upper()
            if key not in environ:
                continue
            raw = environ[key]
            try:
                overrides[f.name] = int(raw) if f.type in (int, "int") else float(raw)
            except ValueError:
                raise ValueError(f"Некорректное значение {key}={raw!r}")
            logger.debug(f"Конфигурация: {f.name}={overrides[f.name]} (из {key})")
        return cls(**overrides)

    def with_overrides(self, **kwargs) -> "EngineConfig":
        """Копия с заменой непустых полей (None игнорируется)"""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


DEFAULT_CONFIG = EngineConfig()
