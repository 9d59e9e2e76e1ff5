"""
Разбиения типа B: валидация, дуги, статистики, перебор, проектор
"""

from .typeb import (
    Block,
    TypeBPartition,
    ExtendedTypeBPartition,
    chain,
    mirror,
    canonicalize,
    parse_partition,
    parse_extended,
    format_partition,
)
from .arcs import Arc, ArcSign, BArc, BBlock, ArcDecomposition, b_arcs
from .statistics import (
    negative_arcs,
    restricted_crossings,
    singleton_covers,
    minmax,
    statistics,
    extended_statistics,
    outer_arcs,
)
from .enumeration import enumerate_partitions, enumerate_filter, enumerate_extended, count
from .projector import ProjectionResult, project, project_and_outer, fiber

__all__ = [
    "Block",
    "TypeBPartition",
    "ExtendedTypeBPartition",
    "chain",
    "mirror",
    "canonicalize",
    "parse_partition",
    "parse_extended",
    "format_partition",
    "Arc",
    "ArcSign",
    "BArc",
    "BBlock",
    "ArcDecomposition",
    "b_arcs",
    "negative_arcs",
    "restricted_crossings",
    "singleton_covers",
    "minmax",
    "statistics",
    "extended_statistics",
    "outer_arcs",
    "enumerate_partitions",
    "enumerate_filter",
    "enumerate_extended",
    "count",
    "ProjectionResult",
    "project",
    "project_and_outer",
    "fiber",
]
