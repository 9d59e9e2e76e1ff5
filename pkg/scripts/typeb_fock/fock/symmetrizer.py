"""
Симметризатор типа B и разложение P^(n) = (I ⊗ P^(n-1) ⊗ I) R^(n)

R^(n) = I + sum_{k=1}^{n-1} q^k pi_{n-1}...pi_{n-k}
          + alpha q^{n-1} pi_{n-1}...pi_1 pi_0 (1 + sum_{k=1}^{n-1} q^k pi_1...pi_k)

P^(n) = sum_{sigma in B(n)} alpha^{ninv(sigma)} q^{pinv(sigma)} sigma
"""

import logging
from functools import lru_cache
from typing import Dict, List, Tuple

from ..algebra.poly import BivariatePoly
from ..coxeter import SignedPermutation, act_on_word, enumerate_group, inversion_stats, word_to_permutation
from ..exceptions import DimensionMismatchError
from ..models.data_models import InnerProductMode
from .vectors import FockVector, Word, free_inner_product

logger = logging.getLogger(__name__)

GroupElement = Tuple[SignedPermutation, BivariatePoly]


# ============================================================================
# Элементы групповой алгебры
# ============================================================================

@lru_cache(maxsize=None)
def r_terms(n: int) -> Tuple[GroupElement, ...]:
    """Разложение R^(n) по элементам B(n) с весами alpha^a q^b"""
    if n < 1:
        return ()
    terms: List[GroupElement] = [(word_to_permutation((), n), BivariatePoly.one())]
    for k in range(1, n):
        word = tuple(range(n - 1, n - k - 1, -1))
        terms.append((word_to_permutation(word, n), BivariatePoly.monomial(1, 0, k)))
    base = tuple(range(n - 1, -1, -1))
    terms.append((word_to_permutation(base, n), BivariatePoly.monomial(1, 1, n - 1)))
    for k in range(1, n):
        word = base + tuple(range(1, k + 1))
        terms.append((word_to_permutation(word, n), BivariatePoly.monomial(1, 1, n - 1 + k)))
    return tuple(terms)


@lru_cache(maxsize=None)
def symmetrizer_terms(n: int) -> Tuple[GroupElement, ...]:
    """Прямая сумма по группе B(n)"""
    if n < 1:
        return ()
    terms = []
    for sigma in enumerate_group(n):
        st = inversion_stats(sigma)
        terms.append((sigma, BivariatePoly.monomial(1, st.ninv, st.pinv)))
    logger.debug(f"Симметризатор P^({n}): {len(terms)} элементов группы")
    return tuple(terms)


def _apply_group_element(v: FockVector, terms_for_level) -> FockVector:
    def on_word(w: Word):
        n = len(w) // 2
        if n == 0:
            return [(w, BivariatePoly.one())]
        return [(act_on_word(sigma, w), c) for sigma, c in terms_for_level(n)]

    return v.linear_map(on_word)


# ============================================================================
# Операторы на векторах Фока
# ============================================================================

def apply_R(v: FockVector) -> FockVector:
    """R^(n) поуровнево; вакуум неподвижен"""
    return _apply_group_element(v, r_terms)


def apply_symmetrizer(v: FockVector) -> FockVector:
    """P^(n) поуровнево прямым суммированием по группе"""
    return _apply_group_element(v, symmetrizer_terms)


def apply_symmetrizer_recursive(v: FockVector) -> FockVector:
    """P^(n) через разложение (I ⊗ P^(n-1) ⊗ I) R^(n)"""
    cache: Dict[Word, Dict[Word, BivariatePoly]] = {}

    def expand(w: Word) -> Dict[Word, BivariatePoly]:
        if w in cache:
            return cache[w]
        n = len(w) // 2
        if n == 0:
            cache[w] = {w: BivariatePoly.one()}
            return cache[w]
        out: Dict[Word, BivariatePoly] = {}
        for sigma, c in r_terms(n):
            image = act_on_word(sigma, w)
            for inner, k in expand(image[1:-1]).items():
                full = (image[0],) + inner + (image[-1],)
                out[full] = out.get(full, BivariatePoly.zero()) + c * k
        cache[w] = {u: c for u, c in out.items() if c}
        return cache[w]

    return v.linear_map(lambda w: expand(w).items())


def inner_product(u: FockVector, v: FockVector, mode: InnerProductMode = InnerProductMode.DEFORMED) -> BivariatePoly:
    """
    Скалярное произведение

    free: поуровневое спаривание координат;
    deformed: <u, P v>_{0,0} (разные уровни ортогональны)

    Raises:
        DimensionMismatchError: векторы над разными пространствами
    """
    if u.dimension != v.dimension:
        raise DimensionMismatchError(f"Скалярное произведение векторов размерности {u.dimension} и {v.dimension}")
    mode = InnerProductMode(mode)
    if mode is InnerProductMode.FREE:
        return free_inner_product(u, v)
    return free_inner_product(u, apply_symmetrizer(v))
