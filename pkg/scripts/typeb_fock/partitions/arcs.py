"""
Дуги и B-блоки разбиения типа B

Дуги соединяют соседние по модулю элементы блока и рисуются от меньшего
значения к большему. B-дуга - дуга положительного блока вместе со своим
отражением; она отрицательна, если соседние элементы цепочки разных знаков.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from .typeb import Block, TypeBPartition


class ArcSign(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True, order=True)
class Arc:
    """Дуга (left, right), left < right"""
    left: int
    right: int

    @classmethod
    def between(cls, a: int, b: int) -> "Arc":
        return cls(min(a, b), max(a, b))

    def mirror(self) -> "Arc":
        return Arc(-self.right, -self.left)

    def crosses(self, other: "Arc") -> bool:
        i, j, k, l = self.left, self.right, other.left, other.right
        return i < k < j < l or k < i < l < j

    def covers(self, point: int) -> bool:
        return self.left < point < self.right

    def covers_arc(self, other: "Arc") -> bool:
        return self.left < other.left and other.right < self.right


@dataclass(frozen=True)
class BArc:
    """Дуга и ее отражение; pos - представитель с положительным правым концом"""
    pos: Arc
    neg: Arc
    sign: ArcSign


@dataclass(frozen=True)
class BBlock:
    """Пара блоков: положительная цепочка и ее отражение"""
    positive_chain: Block
    negative_chain: Block


@dataclass(frozen=True)
class ArcDecomposition:
    arcs: Tuple[BArc, ...]
    singletons: Tuple[int, ...]
    blocks: Tuple[BBlock, ...]

    def drawn_arcs(self) -> Tuple[Arc, ...]:
        """Все нарисованные дуги: обе стороны каждой B-дуги"""
        return tuple(a for b in self.arcs for a in (b.pos, b.neg))


def chain_arcs(positive_chain: Block) -> List[BArc]:
    result = []
    for a, b in zip(positive_chain, positive_chain[1:]):
        drawn = Arc.between(a, b)
        pos, neg = (drawn, drawn.mirror()) if drawn.right > 0 else (drawn.mirror(), drawn)
        sign = ArcSign.NEGATIVE if (a > 0) != (b > 0) else ArcSign.POSITIVE
        result.append(BArc(pos=pos, neg=neg, sign=sign))
    return result


def b_arcs(p: TypeBPartition) -> ArcDecomposition:
    """B-дуги, B-синглетоны и B-блоки разбиения"""
    arcs: List[BArc] = []
    blocks: List[BBlock] = []
    for c in p.positive_chains():
        blocks.append(BBlock(positive_chain=c, negative_chain=tuple(-x for x in c)))
        arcs.extend(chain_arcs(c))
    return ArcDecomposition(arcs=tuple(arcs), singletons=p.singletons(), blocks=tuple(blocks))
