"""
Проектор NC^B(n) -> NC^A(n)

Каждая цепочка заменяется модулями своих элементов: отрицательные дуги
становятся положительными. Число прообразов разбиения типа A равно
2^{outer}, где outer - число внешних дуг.
"""

from dataclasses import dataclass
from typing import List

from ..config import DEFAULT_CONFIG, EngineConfig
from ..exceptions import PreconditionError
from ..models.data_models import PartitionClass
from .enumeration import enumerate_partitions
from .statistics import outer_arcs, statistics
from .typeb import TypeBPartition


@dataclass(frozen=True)
class ProjectionResult:
    image: TypeBPartition
    outer_count: int
    preimage_count: int


def project(p: TypeBPartition) -> TypeBPartition:
    blocks = []
    for c in p.positive_chains():
        positive = tuple(sorted(abs(x) for x in c))
        blocks.append(positive)
        blocks.append(tuple(sorted(-x for x in positive)))
    return TypeBPartition(blocks, p.n)


def project_and_outer(p: TypeBPartition) -> ProjectionResult:
    """
    Образ в NC^A, число внешних дуг образа и число прообразов

    Raises:
        PreconditionError: у разбиения есть пересечения (Rc > 0)
    """
    if statistics(p).rc:
        raise PreconditionError(f"Проектор определен на NC^B, у {p} есть пересечения")
    image = project(p)
    outer = len(outer_arcs(image))
    return ProjectionResult(image=image, outer_count=outer, preimage_count=2 ** outer)


def fiber(p: TypeBPartition, config: EngineConfig = DEFAULT_CONFIG) -> List[TypeBPartition]:
    """Явный перебор прообразов разбиения типа A"""
    if not p.is_type_a() or statistics(p).rc:
        raise PreconditionError(f"Слой определен для разбиений из NC^A, получено {p}")
    return [s for s in enumerate_partitions(p.n, PartitionClass.NC_B, config) if project(s) == p]
