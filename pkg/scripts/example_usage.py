#!/usr/bin/env python3
"""
Пример использования typeb_fock

Обзор: разбиения и статистики, момент по формуле и оракулом,
дефект следа, формула Вика, параметры Якоби и мера при q = 0.
"""

import random
import sys
from fractions import Fraction
from pathlib import Path

# Добавляем путь к модулю
sys.path.insert(0, str(Path(__file__).parent))

from typeb_fock import (
    VerificationPipeline,
    enumerate_partitions,
    meixner_measure,
    moments_from_jacobi,
    parse_partition,
    statistics,
)
from typeb_fock.models import ProblemFile
from typeb_fock.moments import random_problem

PROBLEMS = Path(__file__).parent / "problems"


def show_partitions(n: int = 2):
    """Все разбиения типа B размера n со статистиками (na, rc, cs)"""
    print(f"\n📊 Разбиения типа B, n={n}:")
    for p in enumerate_partitions(n):
        s = statistics(p)
        print(f"   {p.to_text():<28} na={s.na} rc={s.rc} cs={s.cs}")

    fig = parse_partition("{(-4,1),(-1,4),(-3,-2),(2,3)}")
    print(f"\n   {fig}: {statistics(fig)}")


def show_trace_defect(pipeline: VerificationPipeline):
    """phi(B4 B3 B2 B1) - phi(B3 B2 B1 B4) для e1/e2 и T = I"""
    forward = ProblemFile.load(PROBLEMS / "trace_defect_forward.json").to_problem()
    cyclic = ProblemFile.load(PROBLEMS / "trace_defect_cyclic.json").to_problem()
    report = pipeline.compute_moment(forward, minus=cyclic)
    print(f"\n🔁 Дефект следа: {report.payload['combinatorial']}  [{report.verdict.value}]")


def show_random_moment(pipeline: VerificationPipeline, seed: int = 7):
    """Формула по разбиениям против оракула на случайной задаче"""
    problem = random_problem(3, 2, random.Random(seed))
    report = pipeline.compute_moment(problem, specialize=("1/2", "1/3"))
    print(f"\n🎲 Случайная задача n=3, d=2: {report.verdict.value}")
    print(f"   момент = {report.payload['combinatorial']}")
    print(f"   при (alpha, q) = (1/2, 1/3): {report.payload['combinatorial_at']}")

    wick = pipeline.verify_wick(["create", "gauge", "act"], problem)
    print(f"   формула Вика (*, E, 1): {wick.verdict.value}, {wick.payload['words']} базисных слов")


def show_measure(alpha: Fraction = Fraction(2)):
    """Моменты Якоби и мера mu_{alpha,0}"""
    exact = moments_from_jacobi(alpha, 0, 6)
    mu = meixner_measure(float(alpha))
    print(f"\n📈 Мера alpha={alpha}, q=0: атом {mu.atom}")
    for k, m in enumerate(exact):
        print(f"   m_{k}: точно {m} / интеграл {mu.moment(k):.8f}")


if __name__ == "__main__":
    pipeline = VerificationPipeline()
    show_partitions()
    show_trace_defect(pipeline)
    show_random_moment(pipeline)
    show_measure()
    print(f"\n✅ Готово: {pipeline.get_statistics()}")
