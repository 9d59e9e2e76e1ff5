"""
Перебор группы B(n) и производящие функции длины

enumerate_group выдает 2^n n! элементов в лексикографическом порядке
записи в одну строку; reduced_word_table строит таблицу длин обходом
в ширину по образующим.
"""

import logging
from collections import deque
from typing import Dict, Iterator, List, Tuple

from ..algebra.poly import BivariatePoly
from .signed_permutation import SignedPermutation, compose, generator, identity, inversion_stats

logger = logging.getLogger(__name__)


def enumerate_group(n: int) -> Iterator[SignedPermutation]:
    """
    Все элементы B(n) ровно по одному разу

    Порядок: лексикографический по (sigma(1), ..., sigma(n)),
    поток можно перезапускать.
    """
    if n < 1:
        raise ValueError(f"B(n) определена для n >= 1, получено {n}")
    candidates = list(range(-n, 0)) + list(range(1, n + 1))

    def extend(prefix: List[int], used: set) -> Iterator[SignedPermutation]:
        if len(prefix) == n:
            yield SignedPermutation(prefix)
            return
        for v in candidates:
            if abs(v) in used:
                continue
            used.add(abs(v))
            prefix.append(v)
            yield from extend(prefix, used)
            prefix.pop()
            used.discard(abs(v))

    yield from extend([], set())


def group_order(n: int) -> int:
    order = 2 ** n
    for k in range(2, n + 1):
        order *= k
    return order


def reduced_word_table(n: int) -> Dict[SignedPermutation, Tuple[int, ...]]:
    """
    Кратчайшее слово в образующих для каждого элемента B(n)

    Обход в ширину от единицы; слово (i1, ..., ik) означает pi_{i1} ... pi_{ik}.
    Длина слова - длина Коксетера L(sigma).
    """
    gens = [generator(i, n) for i in range(n)]
    start = identity(n)
    table: Dict[SignedPermutation, Tuple[int, ...]] = {start: ()}
    queue = deque([start])
    while queue:
        sigma = queue.popleft()
        word = table[sigma]
        for i, g in enumerate(gens):
            nxt = compose(sigma, g)
            if nxt not in table:
                table[nxt] = word + (i,)
                queue.append(nxt)
    logger.debug(f"Таблица приведенных слов B({n}): {len(table)} элементов")
    return table


def length_generating_function(n: int) -> BivariatePoly:
    """Сумма alpha^{ninv(sigma)} q^{pinv(sigma)} по всем sigma из B(n)"""
    counts: Dict[Tuple[int, int], int] = {}
    for sigma in enumerate_group(n):
        st = inversion_stats(sigma)
        counts[(st.ninv, st.pinv)] = counts.get((st.ninv, st.pinv), 0) + 1
    return BivariatePoly(counts)


def length_generating_product(n: int) -> BivariatePoly:
    """Произведение [i]_q (1 + alpha q^{i-1}) по i = 1..n"""
    result = BivariatePoly.one()
    for i in range(1, n + 1):
        q_int = BivariatePoly({(0, k): 1 for k in range(i)})
        result = result * q_int * (BivariatePoly.one() + BivariatePoly.monomial(1, 1, i - 1))
    return result
