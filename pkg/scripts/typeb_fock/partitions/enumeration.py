"""
Перебор разбиений типа B по классам

Основной путь - рекурсивная вставка пары ±n в разбиение {±1..±(n-1)}:
либо новые синглетоны (n), (-n), либо n в блок V и -n в его отражение.
Контрольный путь enumerate_filter перебирает все разбиения {±1..±n}
и фильтрует их по определению.
"""

import logging
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Optional, Sequence

from ..config import DEFAULT_CONFIG, EngineConfig
from ..exceptions import CapExceededError, PartitionValidationError, PreconditionError
from ..models.data_models import OperatorKind, PartitionClass
from .statistics import statistics
from .typeb import Block, ExtendedTypeBPartition, TypeBPartition, mirror

logger = logging.getLogger(__name__)


def _is_pair_b(p: TypeBPartition) -> bool:
    return all(len(b) == 2 for b in p.blocks)


def _no_singletons(p: TypeBPartition) -> bool:
    return all(len(b) >= 2 for b in p.blocks)


def _blocks_at_most_two(p: TypeBPartition) -> bool:
    return all(len(b) <= 2 for b in p.blocks)


def _noncrossing_type_a(p: TypeBPartition) -> bool:
    st = statistics(p)
    return st.rc == 0 and st.na == 0


CLASS_PREDICATES: Dict[PartitionClass, Callable[[TypeBPartition], bool]] = {
    PartitionClass.B: lambda p: True,
    PartitionClass.A: lambda p: statistics(p).na == 0,
    PartitionClass.PAIR_B: _is_pair_b,
    PartitionClass.NO_SINGLETON_B: _no_singletons,
    PartitionClass.NC_B: lambda p: statistics(p).rc == 0,
    PartitionClass.NC_A: _noncrossing_type_a,
    PartitionClass.B12: _blocks_at_most_two,
}


def _check_n(n: int, config: EngineConfig) -> None:
    if n < 1:
        raise PreconditionError(f"n должно быть >= 1, получено {n}")
    if n > config.partition_cap:
        raise CapExceededError(f"n = {n} превышает лимит перебора разбиений {config.partition_cap}")


def _insert(n: int) -> Iterator[List[Block]]:
    """Все разбиения типа B как списки блоков (рекурсивная вставка ±n)"""
    if n == 0:
        yield []
        return
    for blocks in _insert(n - 1):
        yield blocks + [(-n,), (n,)]
        for idx, b in enumerate(blocks):
            m = mirror(b)
            j = blocks.index(m)
            grown = list(blocks)
            grown[idx] = b + (n,)
            grown[j] = (-n,) + m
            yield grown


def enumerate_partitions(n: int, cls=PartitionClass.B,
                         config: EngineConfig = DEFAULT_CONFIG) -> Iterator[TypeBPartition]:
    """
    Разбиения типа B заданного класса, каждое ровно один раз

    Raises:
        CapExceededError: n больше config.partition_cap
        ValueError: неизвестный класс
    """
    cls = PartitionClass(cls)
    _check_n(n, config)
    predicate = CLASS_PREDICATES[cls]
    for blocks in _insert(n):
        p = TypeBPartition(blocks, n)
        if predicate(p):
            yield p


def _set_partitions(elements: Sequence[int]) -> Iterator[List[List[int]]]:
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def enumerate_filter(n: int, cls=PartitionClass.B, max_n: int = 4) -> List[TypeBPartition]:
    """Контрольный перебор: все разбиения {±1..±n}, отфильтрованные по определению"""
    cls = PartitionClass(cls)
    if n > max_n:
        raise CapExceededError(f"Контрольный перебор ограничен n <= {max_n}")
    elements = [x for x in range(-n, n + 1) if x]
    found = []
    for part in _set_partitions(elements):
        try:
            p = TypeBPartition(part, n)
        except PartitionValidationError:
            continue
        if CLASS_PREDICATES[cls](p):
            found.append(p)
    return found


def count(n: int, cls=PartitionClass.B, config: EngineConfig = DEFAULT_CONFIG) -> int:
    return sum(1 for _ in enumerate_partitions(n, cls, config))


# ============================================================================
# Расширенные разбиения
# ============================================================================

def _chain_allowed(c: Sequence[int], extended: bool, eps: Sequence[OperatorKind]) -> bool:
    labels = [eps[abs(x) - 1] for x in c]
    if len(labels) == 1:
        return labels[0] is OperatorKind.CREATE
    if labels[0] is not OperatorKind.CREATE:
        return False
    if any(lab is not OperatorKind.GAUGE for lab in labels[1:-1]):
        return False
    return labels[-1] is (OperatorKind.GAUGE if extended else OperatorKind.ACT)


def enumerate_extended(n: int, eps: Optional[Sequence] = None,
                       config: EngineConfig = DEFAULT_CONFIG) -> Iterator[ExtendedTypeBPartition]:
    """
    Расширенные разбиения P^B_E(n), совместимые с метками eps

    eps[i-1] - буква оператора с индексом i (create / act / gauge).
    Без eps выдаются все отметки. Регулярная цепочка требует
    (create, gauge, ..., gauge, act), расширенная - (create, gauge, ..., gauge),
    синглетон - create.
    """
    if eps is not None:
        eps = [OperatorKind.parse(e) if isinstance(e, str) else OperatorKind(e) for e in eps]
        if len(eps) != n:
            raise PreconditionError(f"Длина eps = {len(eps)}, ожидалось n = {n}")
    _check_n(n, config)
    for p in enumerate_partitions(n, PartitionClass.B, config):
        chains = [c for c in p.positive_chains() if len(c) > 1]
        for k in range(len(chains) + 1):
            for chosen in combinations(range(len(chains)), k):
                if eps is not None:
                    ok = all(_chain_allowed(c, i in chosen, eps) for i, c in enumerate(chains))
                    ok = ok and all(eps[s - 1] is OperatorKind.CREATE for s in p.singletons())
                    if not ok:
                        continue
                yield ExtendedTypeBPartition(p, [tuple(sorted(chains[i])) for i in chosen])
