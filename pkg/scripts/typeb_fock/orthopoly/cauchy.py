"""
Преобразование Коши меры ортогональности и обращение Стилтьеса

G(z) = 1 / (z - beta_0 - gamma_0 / (z - beta_1 - gamma_1 / (z - ...)))

Цепная дробь обрывается на глубине depth; хвост либо нулевой,
либо асимптотический: параметры стремятся к 1/(1-q), и хвост
заменяется неподвижной точкой t = 1 / (z - b - b t).
"""

import cmath
import logging
import math
from typing import Tuple

from ..config import DEFAULT_CONFIG, EngineConfig
from ..exceptions import NumericalSingularityError, PreconditionError
from .meixner import atom_location

logger = logging.getLogger(__name__)

BLOWUP_TOL = 1e-300


def _params_float(alpha: float, q: float, n: int) -> Tuple[float, float]:
    """(beta_n, gamma_n) в плавающей точке"""
    def beta(k: int) -> float:
        if k == 0:
            return 0.0
        return sum(q ** j for j in range(k)) * (1 + alpha * q ** (k - 1))
    return beta(n), beta(n + 1)


def _asymptotic_tail(z: complex, q: float) -> complex:
    """Ветвь с Im t <= 0 при Im z > 0"""
    b = 1.0 / (1.0 - q)
    w = z - b
    root = cmath.sqrt(w * w - 4 * b)
    candidates = ((w - root) / (2 * b), (w + root) / (2 * b))
    return min(candidates, key=lambda t: (t.imag > 0, abs(t)))


def cauchy_cf(alpha: float, q: float, z: complex, depth: int = None, tail: str = "asymptotic",
              config: EngineConfig = DEFAULT_CONFIG) -> complex:
    """
    Значение G(z) через оборванную цепную дробь

    Args:
        tail: "asymptotic" (хвост-неподвижная точка) или "zero"

    Raises:
        PreconditionError: Im z = 0, depth < 1 или |q| >= 1 при асимптотическом хвосте
        NumericalSingularityError: знаменатель обратился в ноль
    """
    depth = config.cf_depth if depth is None else depth
    z = complex(z)
    if z.imag == 0:
        raise PreconditionError(f"Преобразование Коши вычисляется при Im z != 0, получено z={z}")
    if depth < 1:
        raise PreconditionError(f"Глубина цепной дроби должна быть >= 1, получено {depth}")
    if tail not in ("asymptotic", "zero"):
        raise ValueError(f"Неизвестный хвост цепной дроби: {tail!r}")
    if tail == "asymptotic" and not -1 < q < 1:
        raise PreconditionError(f"Асимптотический хвост требует |q| < 1, получено q={q}")
    t = _asymptotic_tail(z, q) if tail == "asymptotic" else 0j
    for n in range(depth - 1, -1, -1):
        beta, gamma = _params_float(alpha, q, n)
        denom = z - beta - gamma * t
        if abs(denom) < BLOWUP_TOL or not cmath.isfinite(denom):
            raise NumericalSingularityError(f"Разрыв цепной дроби на уровне {n} при z={z}")
        t = 1.0 / denom
    return t


def stieltjes_density(alpha: float, q: float, x: float, eps: float = None, depth: int = None,
                      config: EngineConfig = DEFAULT_CONFIG) -> float:
    """-(1/pi) Im G(x + i eps)"""
    eps = config.stieltjes_eps if eps is None else eps
    return -cauchy_cf(alpha, q, complex(x, eps), depth, config=config).imag / math.pi


def cauchy_closed_form(alpha: float, z: complex) -> complex:
    """
    Замкнутая форма при q = 0

    G(z) = (z - (1+2alpha) + f) / (z^2 - z(1+2alpha) - 2(1+alpha) + z f),
    f = sqrt(z-3) sqrt(z+1) (главные ветви)
    """
    z = complex(z)
    f = cmath.sqrt(z - 3) * cmath.sqrt(z + 1)
    s = 1 + 2 * alpha
    denom = z * z - z * s - 2 * (1 + alpha) + z * f
    if abs(denom) < BLOWUP_TOL:
        raise NumericalSingularityError(f"Полюс замкнутой формы G в z={z}")
    return (z - s + f) / denom


def atom_mass_from_transform(alpha: float, eps: float = None, method: str = "closed",
                             config: EngineConfig = DEFAULT_CONFIG) -> float:
    """
    Масса атома как i eps G(x_alpha + i eps)

    Raises:
        PreconditionError: alpha <= 0 (атома нет)
    """
    if alpha <= 0:
        raise PreconditionError(f"Атом существует только при alpha > 0, получено {alpha}")
    eps = config.stieltjes_eps if eps is None else eps
    z = complex(atom_location(alpha), eps)
    g = cauchy_closed_form(alpha, z) if method == "closed" else cauchy_cf(alpha, 0.0, z, config=config)
    return abs(1j * eps * g)
