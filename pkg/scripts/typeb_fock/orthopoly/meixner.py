"""
Двухсостоятельная свободная мера Мейкснера (q = 0)

Плотность на (-1, 3):
    (alpha+1) sqrt(4 - (x-1)^2) / (2 pi p_alpha(x)),
    p_alpha(x) = -alpha x^3 + alpha^2 x^2 + (2alpha^2 + 3alpha + 1) x + (alpha+1)^2
При alpha > 0 добавляется атом массы lambda_alpha в точке x_alpha >= 3.
При alpha = 0 получается сдвинутый закон Марченко-Пастура.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from scipy import integrate

from ..exceptions import PreconditionError

logger = logging.getLogger(__name__)

SUPPORT = (-1.0, 3.0)


def atom_location(alpha: float) -> float:
    """x_alpha = (alpha+1)(alpha + sqrt(alpha(alpha+4))) / (2 alpha)"""
    return (alpha + 1) * (alpha + math.sqrt(alpha * (alpha + 4))) / (2 * alpha)


def atom_mass(alpha: float) -> float:
    """lambda_alpha в замкнутой форме; равна нулю при 0 < alpha <= 1/2"""
    a = alpha
    s = math.sqrt(a * (a + 4))
    inner = (a ** 3 + (a ** 2 - 1) * s + 2 * a ** 2 - 3 * a + 2) / a
    numerator = a ** 2 + math.sqrt(2) * a * math.sqrt(inner) + (a - 1) * s + a
    denominator = 2 * a * (a ** 2 + (a + 3) * s + 5 * a + 4)
    return numerator / denominator


@dataclass(frozen=True)
class MeixnerMeasure:
    """
    Мера mu_{alpha, 0}

    Ответственность:
    - Плотность абсолютно непрерывной части на (-1, 3)
    - Атом (x_alpha, lambda_alpha) при alpha > 0
    - Моменты и полная масса квадратурой scipy
    """
    alpha: float
    atom: Optional[Tuple[float, float]]

    def density(self, x):
        """Плотность; вне (-1, 3) равна нулю (принимает скаляры и массивы numpy)"""
        a = self.alpha
        x = np.asarray(x, dtype=float)
        radicand = np.clip(4 - (x - 1) ** 2, 0.0, None)
        p = -a * x ** 3 + a ** 2 * x ** 2 + (2 * a ** 2 + 3 * a + 1) * x + (a + 1) ** 2
        with np.errstate(divide="ignore", invalid="ignore"):
            value = (a + 1) * np.sqrt(radicand) / (2 * np.pi * p)
        inside = (x > SUPPORT[0]) & (x < SUPPORT[1])
        result = np.where(inside, value, 0.0)
        return float(result) if result.ndim == 0 else result

    def moment(self, k: int) -> float:
        """int x^k dmu"""
        value, _ = integrate.quad(lambda x: x ** k * self.density(x), *SUPPORT, epsabs=1e-12, epsrel=1e-12, limit=200)
        if self.atom:
            x0, mass = self.atom
            value += mass * x0 ** k
        return value

    def total_mass(self) -> float:
        return self.moment(0)


def meixner_measure(alpha: float) -> MeixnerMeasure:
    """
    Raises:
        PreconditionError: alpha <= -1
    """
    if alpha <= -1:
        raise PreconditionError(f"Мера определена при alpha > -1, получено {alpha}")
    atom = (atom_location(alpha), atom_mass(alpha)) if alpha > 0 else None
    if atom:
        logger.debug(f"Атом меры Мейкснера: x={atom[0]:.10f}, масса={atom[1]:.10f}")
    return MeixnerMeasure(alpha=float(alpha), atom=atom)


def measure_moments(alpha: float, k: int) -> List[float]:
    """Моменты m_0..m_k (плотность + атом)"""
    mu = meixner_measure(alpha)
    return [mu.moment(j) for j in range(k + 1)]
