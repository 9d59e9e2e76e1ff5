"""
typeb_fock - точная алгебра двойного пространства Фока типа B

Симметризатор типа B, операторы рождения/уничтожения/калибровки/Пуассона,
статистики разбиений типа B и комбинаторная формула моментов,
ортогональные многочлены и мера Мейкснера.

Использование:
```python
from typeb_fock import FactorSpec, MomentProblem, moment, vacuum_expectation_oracle

f = FactorSpec([1, 0], [0, 1], [[1, 0], [0, 1]], [[1, 0], [0, 1]])
problem = MomentProblem(2, (f, f))
assert moment(problem) == vacuum_expectation_oracle(problem.factors)
```
"""

__version__ = "1.0.0"

from .config import EngineConfig, DEFAULT_CONFIG
from .exceptions import (
    TypeBError,
    DimensionMismatchError,
    CapExceededError,
    PartitionValidationError,
    PreconditionError,
    NumericalSingularityError,
    ProblemFileError,
)
from .algebra import BivariatePoly, poly_mul, poly_eval
from .models import (
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
    ProblemFile,
)
from .coxeter import SignedPermutation, generator, compose, inversion_stats, act_on_word, enumerate_group
from .fock import (
    FockVector,
    apply_R,
    apply_symmetrizer,
    creation,
    annihilation,
    gauge,
    poisson_apply,
    inner_product,
    vacuum_expectation_oracle,
    symmetrizer_spectrum,
    creation_norm,
)
from .partitions import (
    TypeBPartition,
    ExtendedTypeBPartition,
    canonicalize,
    parse_partition,
    parse_extended,
    b_arcs,
    statistics,
    minmax,
    enumerate_partitions,
    enumerate_extended,
    project_and_outer,
)
from .moments import b_cumulant, moment, specialized_moment, wick_vector, trace_defect, random_problem
from .orthopoly import (
    q_number,
    q_pochhammer,
    jacobi,
    poly_Q,
    moments_from_jacobi,
    cauchy_cf,
    meixner_measure,
)
from .verification import VerificationPipeline

__all__ = [
    "__version__",
    "EngineConfig",
    "DEFAULT_CONFIG",
    "TypeBError",
    "DimensionMismatchError",
    "CapExceededError",
    "PartitionValidationError",
    "PreconditionError",
    "NumericalSingularityError",
    "ProblemFileError",
    "BivariatePoly",
    "poly_mul",
    "poly_eval",
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
    "ProblemFile",
    "SignedPermutation",
    "generator",
    "compose",
    "inversion_stats",
    "act_on_word",
    "enumerate_group",
    "FockVector",
    "apply_R",
    "apply_symmetrizer",
    "creation",
    "annihilation",
    "gauge",
    "poisson_apply",
    "inner_product",
    "vacuum_expectation_oracle",
    "symmetrizer_spectrum",
    "creation_norm",
    "TypeBPartition",
    "ExtendedTypeBPartition",
    "canonicalize",
    "parse_partition",
    "parse_extended",
    "b_arcs",
    "statistics",
    "minmax",
    "enumerate_partitions",
    "enumerate_extended",
    "project_and_outer",
    "b_cumulant",
    "moment",
    "specialized_moment",
    "wick_vector",
    "trace_defect",
    "random_problem",
    "q_number",
    "q_pochhammer",
    "jacobi",
    "poly_Q",
    "moments_from_jacobi",
    "cauchy_cf",
    "meixner_measure",
    "VerificationPipeline",
]
