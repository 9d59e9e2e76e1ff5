"""
VerificationPipeline - сверка двух независимых путей вычисления

Каждая проверка возвращает Report с вердиктом equal / mismatch:
- момент: комбинаторная формула против оракула Фока
- формула Вика: сумма по расширенным разбиениям против слова операторов
- разложение симметризатора и замкнутые формы операторов на всех базисных словах

Принципы SOLID:
- Single Responsibility: Только оркестрация и учет статистики
- Dependency Inversion: Лимиты приходят через EngineConfig
"""

import itertools
import logging
import random
import time
from typing import Dict, Optional, Sequence, Tuple

from .algebra.poly import BivariatePoly
from .algebra.rational import RationalLike, as_fraction, format_rational
from .config import DEFAULT_CONFIG, EngineConfig
from .exceptions import CapExceededError
from .fock import (
    FockVector,
    annihilation,
    annihilation_closed,
    apply_symmetrizer,
    apply_symmetrizer_recursive,
    gauge,
    gauge_closed,
    vacuum_expectation_oracle,
)
from .models.data_models import MomentMethod, MomentProblem, OperatorKind, Report, Verdict
from .moments import moment, moment_terms, operator_word_vector, wick_vector
from .partitions import count

logger = logging.getLogger(__name__)


class VerificationPipeline:
    """
    Оркестратор двойных вычислений

    Ответственность:
    - Запуск пары путей и сравнение результатов как точных многочленов
    - Учет статистики (_stats) и времени

    Не отвечает за:
    - Вывод в консоль и коды выхода (см. utils/typeb_cli.py)
    """

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or DEFAULT_CONFIG
        self._stats = {
            "runs": 0,
            "equal": 0,
            "mismatches": 0,
            "partitions": 0,
            "oracle_evaluations": 0,
            "words_checked": 0,
            "elapsed_seconds": 0.0,
        }

    # ========================================================================
    # Моменты
    # ========================================================================

    def compute_moment(self, problem: MomentProblem, method=MomentMethod.BOTH,
                       minus: Optional[MomentProblem] = None,
                       specialize: Optional[Tuple[RationalLike, RationalLike]] = None,
                       with_terms: bool = False) -> Report:
        """
        Момент задачи (или разность моментов двух задач)

        Args:
            method: combinatorial, oracle или both (с вердиктом)
            minus: вычитаемая задача (для дефекта следа)
            specialize: подстановка (alpha, q)
            with_terms: добавить разложение по разбиениям
        """
        method = MomentMethod(method)
        started = time.perf_counter()
        payload: Dict[str, object] = {"n": problem.n, "dimension": problem.dimension, "method": method.value}
        results: Dict[str, BivariatePoly] = {}

        if method in (MomentMethod.COMBINATORIAL, MomentMethod.BOTH):
            results["combinatorial"] = self._combinatorial(problem)
            if minus is not None:
                results["combinatorial"] = results["combinatorial"] - self._combinatorial(minus)
        if method in (MomentMethod.ORACLE, MomentMethod.BOTH):
            results["oracle"] = self._oracle(problem)
            if minus is not None:
                results["oracle"] = results["oracle"] - self._oracle(minus)

        for key, value in results.items():
            payload[key] = value.to_text()
            if specialize is not None:
                payload[f"{key}_at"] = format_rational(value.evaluate(*specialize))
        if specialize is not None:
            payload["alpha"], payload["q"] = (format_rational(as_fraction(v)) for v in specialize)
        if with_terms:
            payload["terms"] = [
                {
                    "partition": t.partition.to_text(),
                    "na": t.stats.na,
                    "rc": t.stats.rc,
                    "cs": t.stats.cs,
                    "cumulant": format_rational(t.cumulant),
                }
                for t in moment_terms(problem, config=self.config)
            ]

        verdict, diff = None, None
        if method is MomentMethod.BOTH:
            verdict, diff = self._compare(results["combinatorial"], results["oracle"])
        return self._finish(Report(command="moment", payload=payload, verdict=verdict, diff=diff), started)

    def _combinatorial(self, problem: MomentProblem) -> BivariatePoly:
        value = moment(problem, self.config)
        self._stats["partitions"] += count(problem.n, config=self.config)
        return value

    def _oracle(self, problem: MomentProblem) -> BivariatePoly:
        self._stats["oracle_evaluations"] += 1
        return vacuum_expectation_oracle(problem.factors)

    # ========================================================================
    # Формула Вика
    # ========================================================================

    def verify_wick(self, eps: Sequence, problem: MomentProblem) -> Report:
        started = time.perf_counter()
        combinatorial = wick_vector(eps, problem, self.config)
        direct = operator_word_vector(eps, problem)
        verdict, diff = self._compare_vectors(combinatorial, direct)
        payload = {
            "eps": [OperatorKind.parse(e).value for e in eps],
            "n": problem.n,
            "words": len(combinatorial),
            "vector": combinatorial.to_text(),
        }
        return self._finish(Report(command="wick", payload=payload, verdict=verdict, diff=diff), started)

    # ========================================================================
    # Симметризатор и замкнутые формы
    # ========================================================================

    def verify_decomposition(self, n: int, d: int, seed: Optional[int] = None) -> Report:
        """
        P^(n) = (I ⊗ P^(n-1) ⊗ I) R^(n) и замкнутые формы на всех словах уровня n

        Raises:
            CapExceededError: d^{2n} больше config.dense_basis_cap
        """
        if d ** (2 * n) > self.config.dense_basis_cap:
            raise CapExceededError(f"d^(2n) = {d ** (2 * n)} превышает лимит {self.config.dense_basis_cap}")
        started = time.perf_counter()
        rng = random.Random(self.config.seed if seed is None else seed)
        x = [rng.randint(-2, 2) for _ in range(d)]
        y = [rng.randint(-2, 2) for _ in range(d)]
        tl = [[rng.randint(-2, 2) for _ in range(d)] for _ in range(d)]
        tr = [[rng.randint(-2, 2) for _ in range(d)] for _ in range(d)]
        failures = []
        checked = 0
        for word in itertools.product(range(1, d + 1), repeat=2 * n):
            v = FockVector.basis(d, word)
            checks = {
                "decomposition": (apply_symmetrizer(v), apply_symmetrizer_recursive(v)),
                "annihilation": (annihilation(x, y, v), annihilation_closed(x, y, v)),
                "gauge": (gauge(tl, tr, v), gauge_closed(tl, tr, v)),
            }
            for name, (lhs, rhs) in checks.items():
                if lhs != rhs:
                    failures.append(f"{name} {word}")
            checked += 1
        self._stats["words_checked"] += checked
        verdict = Verdict.EQUAL if not failures else Verdict.MISMATCH
        payload = {"n": n, "d": d, "words": checked, "failures": failures[:20]}
        diff = None if not failures else f"{len(failures)} несовпадений"
        return self._finish(Report(command="symmetrizer", payload=payload, verdict=verdict, diff=diff), started)

    # ========================================================================
    # Служебное
    # ========================================================================

    @staticmethod
    def _compare(lhs: BivariatePoly, rhs: BivariatePoly) -> Tuple[Verdict, Optional[str]]:
        delta = lhs - rhs
        if delta.is_zero():
            return Verdict.EQUAL, None
        return Verdict.MISMATCH, delta.to_text()

    @staticmethod
    def _compare_vectors(lhs: FockVector, rhs: FockVector) -> Tuple[Verdict, Optional[str]]:
        delta = lhs - rhs
        if delta.is_zero():
            return Verdict.EQUAL, None
        return Verdict.MISMATCH, delta.to_text()

    def _finish(self, report: Report, started: float) -> Report:
        report.seconds = time.perf_counter() - started
        self._stats["runs"] += 1
        self._stats["elapsed_seconds"] += report.seconds
        if report.verdict is Verdict.EQUAL:
            self._stats["equal"] += 1
        elif report.verdict is Verdict.MISMATCH:
            self._stats["mismatches"] += 1
            logger.warning(f"Несовпадение в {report.command}: {report.diff}")
        return report

    def get_statistics(self) -> dict:
        return dict(self._stats)

    def __repr__(self) -> str:
        return (
            f"VerificationPipeline(runs={self._stats['runs']}, equal={self._stats['equal']}, "
            f"mismatches={self._stats['mismatches']})"
        )
