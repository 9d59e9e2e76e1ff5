"""
(alpha, q)-пуассоновские ортогональные многочлены

t Q_n = Q_{n+1} + beta_n Q_n + gamma_{n-1} Q_{n-1},  Q_{-1} = 0, Q_0 = 1
beta_0 = 0, beta_n = gamma_{n-1} = [n]_q (1 + alpha q^{n-1})

Многочлен от t хранится кортежем коэффициентов (младший первым),
коэффициенты - BivariatePoly (символьно) или Fraction.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple, TypeVar

from ..algebra.poly import BivariatePoly
from ..algebra.rational import RationalLike, as_fraction
from ..models.data_models import JacobiParams

Coeff = TypeVar("Coeff")
TPoly = Tuple[BivariatePoly, ...]


def q_number(n: int, q: RationalLike) -> Fraction:
    """[n]_q = 1 + q + ... + q^{n-1}"""
    if n < 1:
        raise ValueError(f"[n]_q определено для n >= 1, получено {n}")
    q = as_fraction(q)
    return sum((q ** k for k in range(n)), Fraction(0))


def q_pochhammer(s: RationalLike, q: RationalLike, n: int) -> Fraction:
    """(s; q)_n = prod_{k=1}^{n} (1 - s q^{k-1})"""
    if n < 1:
        raise ValueError(f"(s; q)_n определен для n >= 1, получено {n}")
    s, q = as_fraction(s), as_fraction(q)
    result = Fraction(1)
    for k in range(n):
        result *= 1 - s * q ** k
    return result


def beta_poly(n: int) -> BivariatePoly:
    """beta_n как многочлен от (alpha, q)"""
    if n == 0:
        return BivariatePoly.zero()
    q_int = BivariatePoly({(0, k): 1 for k in range(n)})
    return q_int * (BivariatePoly.one() + BivariatePoly.monomial(1, 1, n - 1))


def gamma_poly(n: int) -> BivariatePoly:
    return beta_poly(n + 1)


def jacobi(alpha: RationalLike, q: RationalLike, N: int) -> JacobiParams:
    """Параметры beta_0..beta_N и gamma_0..gamma_N при рациональных alpha, q"""
    if N < 0:
        raise ValueError(f"N должно быть >= 0, получено {N}")
    a, b = as_fraction(alpha), as_fraction(q)
    beta = tuple(beta_poly(n).evaluate(a, b) for n in range(N + 1))
    gamma = tuple(gamma_poly(n).evaluate(a, b) for n in range(N + 1))
    return JacobiParams(alpha=a, q=b, beta=beta, gamma=gamma)


# ============================================================================
# Многочлены от t
# ============================================================================

def _trim(p: List) -> Tuple:
    while len(p) > 1 and not p[-1]:
        p.pop()
    return tuple(p)


def t_add(p: Sequence, r: Sequence) -> Tuple:
    size = max(len(p), len(r))
    zero = BivariatePoly.zero()
    return _trim([(p[i] if i < len(p) else zero) + (r[i] if i < len(r) else zero) for i in range(size)])


def t_scale(p: Sequence, c) -> Tuple:
    return _trim([a * c for a in p])


def t_shift(p: Sequence) -> Tuple:
    """Умножение на t"""
    return (BivariatePoly.zero(),) + tuple(p)


def t_mul(p: Sequence, r: Sequence) -> Tuple:
    out = [BivariatePoly.zero()] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(r):
            out[i + j] = out[i + j] + a * b
    return _trim(out)


def poly_Q_sequence(N: int) -> List[TPoly]:
    """Q_0, ..., Q_N с коэффициентами BivariatePoly"""
    prev: TPoly = (BivariatePoly.zero(),)
    cur: TPoly = (BivariatePoly.one(),)
    result = [cur]
    for n in range(N):
        nxt = t_add(t_shift(cur), t_scale(cur, -beta_poly(n)))
        if n > 0:
            nxt = t_add(nxt, t_scale(prev, -gamma_poly(n - 1)))
        prev, cur = cur, nxt
        result.append(cur)
    return result


def poly_Q(n: int) -> TPoly:
    """Q_n: унитарный многочлен степени n от t"""
    if n < 0:
        raise ValueError(f"n должно быть >= 0, получено {n}")
    return poly_Q_sequence(n)[n]


def t_poly_text(p: Sequence[BivariatePoly]) -> str:
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        power = "" if k == 0 else ("*t" if k == 1 else f"*t^{k}")
        parts.append(f"({c.to_text()}){power}")
    return " + ".join(parts) if parts else "0"


# ============================================================================
# Моменты
# ============================================================================

def _motzkin_moments(beta: Sequence, gamma: Sequence, N: int, zero, one) -> List:
    """m_k = (J^k)_{00} для трехдиагонального J (взвешенные пути Моцкина)"""
    size = N // 2 + 2
    v = [one] + [zero] * size
    moments = [one]
    for _ in range(N):
        nxt = [zero] * (size + 1)
        for h in range(size):
            if not v[h]:
                continue
            nxt[h] = nxt[h] + v[h] * beta[h]
            if h + 1 <= size:
                nxt[h + 1] = nxt[h + 1] + v[h]
            if h > 0:
                nxt[h - 1] = nxt[h - 1] + v[h] * gamma[h - 1]
        v = nxt
        moments.append(v[0])
    return moments


def moments_from_jacobi(alpha: RationalLike, q: RationalLike, N: int) -> List[Fraction]:
    """Точные моменты m_0..m_N меры ортогональности"""
    if N < 0:
        raise ValueError(f"N должно быть >= 0, получено {N}")
    params = jacobi(alpha, q, N // 2 + 2)
    return _motzkin_moments(params.beta, params.gamma, N, Fraction(0), Fraction(1))


def moment_polys(N: int) -> List[BivariatePoly]:
    """Моменты m_0..m_N как многочлены от (alpha, q)"""
    size = N // 2 + 3
    beta = [beta_poly(n) for n in range(size)]
    gamma = [gamma_poly(n) for n in range(size)]
    return _motzkin_moments(beta, gamma, N, BivariatePoly.zero(), BivariatePoly.one())


def moment_functional(moments: Sequence, p: Sequence):
    """L(p) = sum_k p_k m_k"""
    if len(p) > len(moments):
        raise ValueError(f"Нужно {len(p)} моментов, передано {len(moments)}")
    total = BivariatePoly.zero()
    for c, m in zip(p, moments):
        total = total + c * m
    return total


def orthogonality_norms(N: int) -> List[List[BivariatePoly]]:
    """Таблица L(Q_m Q_n), m, n <= N, символьно по (alpha, q)"""
    qs = poly_Q_sequence(N)
    moments = moment_polys(2 * N)
    return [[moment_functional(moments, t_mul(qs[m], qs[n])) for n in range(N + 1)] for m in range(N + 1)]


def gamma_products(N: int) -> List[BivariatePoly]:
    """gamma_0 ... gamma_{n-1} для n = 0..N"""
    result = [BivariatePoly.one()]
    for n in range(N):
        result.append(result[-1] * gamma_poly(n))
    return result
