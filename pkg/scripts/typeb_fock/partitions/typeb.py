"""
Разбиения типа B множества {±1, ..., ±n}

Разбиение типа B инвариантно относительно отражения x -> -x и не содержит
блока, в котором одновременно лежат a и -a. Внутри блока элементы
выстраиваются в цепочку по возрастанию модуля; положительный блок пары -
тот, чья цепочка заканчивается положительным элементом.

Канонический текст: "{(-4,1),(-1,4),(-3,-2),(2,3)}", блоки по возрастанию
минимума, расширенные пары помечаются суффиксом E у обоих блоков.
"""

import re
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from ..exceptions import PartitionValidationError

Block = Tuple[int, ...]

_BLOCK_RE = re.compile(r"\(([^()]*)\)(E?)")


def chain(block: Sequence[int]) -> Block:
    """Элементы блока в порядке возрастания модуля"""
    return tuple(sorted(block, key=abs))


def mirror(block: Sequence[int]) -> Block:
    return tuple(sorted(-x for x in block))


def is_positive_block(block: Sequence[int]) -> bool:
    return chain(block)[-1] > 0


class TypeBPartition:
    """
    Разбиение типа B

    Ответственность:
    - Валидация (покрытие, инвариантность, отсутствие самоотраженных блоков)
    - Канонический порядок блоков и текстовый вид
    - Пары блоков (отрицательный, положительный) и цепочки

    Не отвечает за:
    - Дуги и статистики (см. arcs.py, statistics.py)
    - Перебор (см. enumeration.py)
    """

    __slots__ = ("_n", "_blocks")

    def __init__(self, blocks: Iterable[Iterable[int]], n: int):
        self._n = n
        self._blocks = _validate(blocks, n)

    @property
    def n(self) -> int:
        return self._n

    @property
    def blocks(self) -> Tuple[Block, ...]:
        return self._blocks

    def positive_blocks(self) -> Tuple[Block, ...]:
        """Положительные блоки пар, по возрастанию последнего элемента цепочки"""
        return tuple(sorted((b for b in self._blocks if is_positive_block(b)), key=lambda b: chain(b)[-1]))

    def positive_chains(self) -> Tuple[Block, ...]:
        return tuple(chain(b) for b in self.positive_blocks())

    def singletons(self) -> Tuple[int, ...]:
        """Положительные элементы B-синглетонов"""
        return tuple(b[0] for b in self.positive_blocks() if len(b) == 1)

    def is_type_a(self) -> bool:
        """Все блоки одного знака"""
        return all(all(x > 0 for x in b) or all(x < 0 for x in b) for b in self._blocks)

    def to_text(self) -> str:
        return "{" + ",".join(_format_block(b) for b in self._blocks) + "}"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TypeBPartition):
            return NotImplemented
        return self._n == other._n and self._blocks == other._blocks

    def __hash__(self) -> int:
        return hash((self._n, self._blocks))

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"TypeBPartition({self.to_text()}, n={self._n})"


class ExtendedTypeBPartition:
    """
    Разбиение типа B с отмеченными (расширенными) парами блоков

    Пара идентифицируется своим положительным блоком; все B-синглетоны
    расширены по определению.
    """

    __slots__ = ("_base", "_extended")

    def __init__(self, base: TypeBPartition, extended: Iterable[Sequence[int]] = ()):
        self._base = base
        positive = set(base.positive_blocks())
        marked = set()
        for b in extended:
            b = tuple(sorted(b))
            if b not in base.blocks:
                raise PartitionValidationError(f"Отмеченный блок {b} не входит в разбиение {base}")
            marked.add(b if b in positive else mirror(b))
        marked.update(b for b in positive if len(b) == 1)
        self._extended: FrozenSet[Block] = frozenset(marked)

    @property
    def base(self) -> TypeBPartition:
        return self._base

    @property
    def n(self) -> int:
        return self._base.n

    @property
    def extended(self) -> FrozenSet[Block]:
        return self._extended

    def is_extended(self, block: Sequence[int]) -> bool:
        b = tuple(sorted(block))
        return b in self._extended or mirror(b) in self._extended

    def extended_chains(self) -> Tuple[Block, ...]:
        """Цепочки положительных расширенных блоков по возрастанию последнего элемента"""
        return tuple(c for c in self._base.positive_chains() if tuple(sorted(c)) in self._extended)

    def regular_chains(self) -> Tuple[Block, ...]:
        return tuple(c for c in self._base.positive_chains() if tuple(sorted(c)) not in self._extended)

    def to_text(self) -> str:
        parts = [_format_block(b) + ("E" if self.is_extended(b) else "") for b in self._base.blocks]
        return "{" + ",".join(parts) + "}"

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtendedTypeBPartition):
            return NotImplemented
        return self._base == other._base and self._extended == other._extended

    def __hash__(self) -> int:
        return hash((self._base, self._extended))

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"ExtendedTypeBPartition({self.to_text()})"


# ============================================================================
# Валидация и текст
# ============================================================================

def _validate(blocks: Iterable[Iterable[int]], n: int) -> Tuple[Block, ...]:
    if n < 1:
        raise PartitionValidationError(f"n должно быть >= 1, получено {n}")
    result: List[Block] = []
    seen = set()
    for raw in blocks:
        b = tuple(sorted(int(x) for x in raw))
        if not b:
            raise PartitionValidationError("Пустой блок")
        for x in b:
            if x == 0 or abs(x) > n:
                raise PartitionValidationError(f"Элемент {x} вне {{±1..±{n}}}")
            if x in seen:
                raise PartitionValidationError(f"Элемент {x} встречается дважды")
            seen.add(x)
        if any(-x in b for x in b):
            raise PartitionValidationError(f"Блок {b} содержит пару a, -a (самоотраженная дуга)")
        result.append(b)
    missing = [x for x in range(-n, n + 1) if x and x not in seen]
    if missing:
        raise PartitionValidationError(f"Элементы {missing} не покрыты блоками")
    block_set = set(result)
    for b in result:
        if mirror(b) not in block_set:
            raise PartitionValidationError(f"Нет отражения блока {b}: разбиение не инвариантно")
    return tuple(sorted(result))


def canonicalize(blocks: Iterable[Iterable[int]], n: int = None) -> TypeBPartition:
    """
    Проверить и привести к каноническому виду

    Args:
        blocks: блоки (любой порядок элементов и блоков)
        n: размер; по умолчанию максимальный модуль элемента

    Raises:
        PartitionValidationError: не разбиение, не инвариантно или есть блок с a и -a
    """
    blocks = [tuple(b) for b in blocks]
    if n is None:
        n = max((abs(x) for b in blocks for x in b), default=0)
    return TypeBPartition(blocks, n)


def _format_block(b: Block) -> str:
    return "(" + ",".join(str(x) for x in b) + ")"


def _split_blocks(text: str) -> List[Tuple[Block, bool]]:
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise PartitionValidationError(f"Ожидалась запись в фигурных скобках: {text!r}")
    body = body[1:-1].replace(" ", "")
    pos, parsed = 0, []
    while pos < len(body):
        m = _BLOCK_RE.match(body, pos)
        if not m:
            raise PartitionValidationError(f"Ошибка разбора блока в позиции {pos}: {text!r}")
        try:
            elems = tuple(int(tok) for tok in m.group(1).split(","))
        except ValueError:
            raise PartitionValidationError(f"Некорректные элементы блока ({m.group(1)})")
        parsed.append((elems, bool(m.group(2))))
        pos = m.end()
        if pos < len(body):
            if body[pos] != ",":
                raise PartitionValidationError(f"Ожидалась запятая в позиции {pos}: {text!r}")
            pos += 1
    if not parsed:
        raise PartitionValidationError("Пустое разбиение")
    return parsed


def parse_partition(text: str, n: int = None) -> TypeBPartition:
    """Разобрать "{(-2,-1),(1,2)}"; метки E запрещены"""
    parsed = _split_blocks(text)
    if any(flag for _, flag in parsed):
        raise PartitionValidationError("Метки E допустимы только в расширенном разбиении")
    return canonicalize([b for b, _ in parsed], n)


def parse_extended(text: str, n: int = None) -> ExtendedTypeBPartition:
    """
    Разобрать "{(-2)E,(-1,1)...}" с метками E

    Raises:
        PartitionValidationError: метка есть только у одного блока пары
    """
    parsed = _split_blocks(text)
    base = canonicalize([b for b, _ in parsed], n)
    flags = {tuple(sorted(b)): flag for b, flag in parsed}
    marked = []
    for b, flag in flags.items():
        if len(b) > 1 and flag != flags[mirror(b)]:
            raise PartitionValidationError(f"Метка E у блока {b} без отражения {mirror(b)}")
        if flag:
            marked.append(b)
    return ExtendedTypeBPartition(base, marked)


def format_partition(p) -> str:
    return p.to_text()
