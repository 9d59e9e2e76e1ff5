"""
Data Models для typeb_fock

Перечисления, записи статистик, задача о моменте и схема файла задачи.
"""

from .data_models import (
    PartitionClass,
    OperatorKind,
    InnerProductMode,
    MomentMethod,
    SpecializationMode,
    NormRegion,
    Verdict,
    InversionStats,
    StatRecord,
    FactorSpec,
    MomentProblem,
    JacobiParams,
    Report,
)
from .problem_file import FactorModel, ProblemFile

__all__ = [
    "PartitionClass",
    "OperatorKind",
    "InnerProductMode",
    "MomentMethod",
    "SpecializationMode",
    "NormRegion",
    "Verdict",
    "InversionStats",
    "StatRecord",
    "FactorSpec",
    "MomentProblem",
    "JacobiParams",
    "Report",
    "FactorModel",
    "ProblemFile",
]
