"""
Общие фикстуры тестов typeb_fock

scripts/ добавляется в sys.path, чтобы импортировать пакет и CLI
так же, как их импортируют скрипты.
"""

import random
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).parent.parent
sys.path.insert(0, str(SCRIPTS))

from typeb_fock.config import DEFAULT_CONFIG  # noqa: E402
from typeb_fock.models import FactorSpec, MomentProblem  # noqa: E402


@pytest.fixture
def rng():
    return random.Random(DEFAULT_CONFIG.seed)


@pytest.fixture
def problems_dir() -> Path:
    return SCRIPTS / "problems"


def unit_factor(x, d: int = None) -> FactorSpec:
    """B(x ⊗ x) с T = I и lambda = 0"""
    d = d or len(x)
    eye = [[int(i == j) for j in range(d)] for i in range(d)]
    return FactorSpec(x, x, eye, eye)


def problem_of(*factors: FactorSpec) -> MomentProblem:
    return MomentProblem(factors[0].dimension, factors)
