"""
Статистики разбиений типа B: Na, Rc, Cs, MinMax

- Na: число отрицательных B-дуг
- Rc: число пересекающихся пар нарисованных дуг (без пар дуга/ее отражение), деленное на 2
- Cs: сумма по B-синглетонам s > 0 числа дуг, строго накрывающих s
- MinMax: сумма по расширенным парам числа дуг, строго накрывающих
  положительный крайний элемент
"""

from typing import Sequence, Tuple

from ..models.data_models import StatRecord
from .arcs import Arc, ArcDecomposition, ArcSign, b_arcs
from .typeb import ExtendedTypeBPartition, TypeBPartition


def negative_arcs(dec: ArcDecomposition) -> int:
    return sum(1 for a in dec.arcs if a.sign is ArcSign.NEGATIVE)


def restricted_crossings(dec: ArcDecomposition) -> int:
    drawn = dec.drawn_arcs()
    count = 0
    for i, a in enumerate(drawn):
        for b in drawn[i + 1:]:
            if b != a.mirror() and a.crosses(b):
                count += 1
    return count // 2


def covering_count(drawn: Sequence[Arc], point: int) -> int:
    return sum(1 for a in drawn if a.covers(point))


def singleton_covers(dec: ArcDecomposition) -> int:
    drawn = dec.drawn_arcs()
    return sum(covering_count(drawn, s) for s in dec.singletons)


def minmax(p: ExtendedTypeBPartition) -> int:
    """MinMax расширенного разбиения"""
    drawn = b_arcs(p.base).drawn_arcs()
    return sum(covering_count(drawn, c[-1]) for c in p.extended_chains())


def statistics(p: TypeBPartition) -> StatRecord:
    """(na, rc, cs) разбиения; minmax остается None"""
    dec = b_arcs(p)
    return StatRecord(na=negative_arcs(dec), rc=restricted_crossings(dec), cs=singleton_covers(dec))


def extended_statistics(p: ExtendedTypeBPartition) -> StatRecord:
    base = statistics(p.base)
    return StatRecord(na=base.na, rc=base.rc, cs=base.cs, minmax=minmax(p))


def outer_arcs(p: TypeBPartition) -> Tuple[Arc, ...]:
    """Положительные дуги, не накрытые строго никакой другой положительной дугой"""
    positive = [a.pos for a in b_arcs(p).arcs]
    return tuple(a for a in positive if not any(o.covers_arc(a) for o in positive if o != a))
