"""Формула моментов, кумулянты, частные случаи, след и формула Вика против оракула"""

import itertools
import random
from dataclasses import replace
from fractions import Fraction

import pytest

from typeb_fock.algebra import ALPHA, Q
from typeb_fock.config import EngineConfig
from typeb_fock.exceptions import CapExceededError, PreconditionError
from typeb_fock.fock import vacuum_expectation_oracle
from typeb_fock.models import FactorSpec, MomentProblem, ProblemFile
from typeb_fock.moments import (
    b_cumulant,
    cyclic_shift,
    moment,
    moment_by,
    moment_terms,
    operator_word_vector,
    random_problem,
    specialized_moment,
    trace_defect,
    wick_terms,
    wick_vector,
)
from typeb_fock.partitions import b_arcs, parse_partition

TRACE_DEFECT = ALPHA ** 2 * Q ** 2 + ALPHA ** 3 - 4 * ALPHA ** 2 + 3 * ALPHA - 1
KINDS = ("create", "act", "gauge")


@pytest.fixture
def small_problem() -> MomentProblem:
    eye = [[1, 0], [0, 1]]
    return MomentProblem(2, (
        FactorSpec((1, 0), (0, 1), eye, eye, 2, 3),
        FactorSpec((1, 1), (2, 0), [[0, 1], [1, 0]], [[2, 0], [0, 1]], 1, 1),
        FactorSpec((0, 1), (1, 2), eye, eye),
    ))


# ============================================================================
# Кумулянты
# ============================================================================

def test_b_cumulant_examples(small_problem):
    assert b_cumulant((1,), small_problem) == 6
    assert b_cumulant((-1, 2), small_problem) == 2
    assert b_cumulant((2, -1), small_problem) == 2
    assert b_cumulant((1, 2, 3), small_problem) == 2
    with pytest.raises(IndexError):
        b_cumulant((4,), small_problem)


def test_b_cumulant_accepts_b_blocks(small_problem):
    p = parse_partition("{(-3,-2,-1),(1,2,3)}")
    block = b_arcs(p).blocks[0]
    assert b_cumulant(block, small_problem) == b_cumulant((1, 2, 3), small_problem)


# ============================================================================
# Формула моментов против оракула
# ============================================================================

@pytest.mark.parametrize("n, d", [(n, d) for n in (1, 2, 3) for d in (2, 3)]
                         + [(4, 2), pytest.param(4, 3, marks=pytest.mark.slow)])
def test_moment_equals_oracle_on_random_problems(n, d):
    for seed in range(20):
        problem = random_problem(n, d, random.Random(1000 * n + 10 * d + seed))
        assert moment(problem) == vacuum_expectation_oracle(problem.factors), seed


# (Na, Rc) для 20 разбиений четвертого момента при lambda = 0
FOURTH_MOMENT_TABLE = {
    "{(-4,-3),(-2,-1),(1,2),(3,4)}": (0, 0),
    "{(-4,-2),(-3,-1),(1,3),(2,4)}": (0, 1),
    "{(-4,-1),(-3,-2),(1,4),(2,3)}": (0, 0),
    "{(-4,-3),(-2,1),(-1,2),(3,4)}": (1, 0),
    "{(-4,-2),(-3,1),(-1,3),(2,4)}": (1, 1),
    "{(-4,-1),(-3,2),(-2,3),(1,4)}": (1, 2),
    "{(-4,3),(-3,4),(-2,-1),(1,2)}": (1, 0),
    "{(-4,2),(-3,-1),(-2,4),(1,3)}": (1, 1),
    "{(-4,1),(-3,-2),(-1,4),(2,3)}": (1, 0),
    "{(-4,3),(-3,4),(-2,1),(-1,2)}": (2, 0),
    "{(-4,2),(-3,1),(-2,4),(-1,3)}": (2, 1),
    "{(-4,1),(-3,2),(-2,3),(-1,4)}": (2, 2),
    "{(-4,-3,-2,-1),(1,2,3,4)}": (0, 0),
    "{(-4,-3,-2,1),(-1,2,3,4)}": (1, 0),
    "{(-4,-3,1,2),(-2,-1,3,4)}": (1, 0),
    "{(-4,1,2,3),(-3,-2,-1,4)}": (1, 0),
    "{(-4,-3,-1,2),(-2,1,3,4)}": (2, 0),
    "{(-4,-2,1,3),(-3,-1,2,4)}": (3, 0),
    "{(-4,-1,2,3),(-3,-2,1,4)}": (2, 0),
    "{(-4,-2,-1,3),(-3,1,2,4)}": (2, 0),
}


def test_fourth_moment_table():
    pos = [[1, 1], [1, 2]]
    factors = tuple(FactorSpec((1, k), (k, 1), pos, [[2, 1], [1, 1]]) for k in (1, 2, 3, 4))
    problem = MomentProblem(2, factors)
    terms = moment_terms(problem)
    got = {t.partition: t.stats.exponent() for t in terms}
    expected = {parse_partition(text): exps for text, exps in FOURTH_MOMENT_TABLE.items()}
    assert len(expected) == 20
    assert got == expected
    assert all(t.cumulant > 0 for t in terms)
    assert sum((t.weight for t in terms), 0 * ALPHA) == vacuum_expectation_oracle(factors)


@pytest.mark.parametrize("index", [0, -1])
def test_moment_is_additive_in_outer_factor(index):
    rng = random.Random(77)
    problem = random_problem(4, 2, rng)
    factor = replace(problem.factors[index], lam_left=Fraction(0), lam_right=Fraction(0))
    u = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(2))
    v = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(2))

    def with_x(x_left, x_right=factor.x_right):
        factors = list(problem.factors)
        factors[index] = replace(factor, x_left=x_left, x_right=x_right)
        return MomentProblem(2, tuple(factors))

    total = with_x(tuple(a + b for a, b in zip(u, v)))
    assert moment(total) == moment(with_x(u)) + moment(with_x(v))
    tripled = with_x(factor.x_left, tuple(3 * c for c in factor.x_right))
    assert moment(tripled) == moment(with_x(factor.x_left)).scale(3)


def test_moment_by_methods(small_problem):
    assert moment_by(small_problem, "combinatorial") == moment_by(small_problem, "oracle")
    with pytest.raises(ValueError):
        moment_by(small_problem, "both")


def test_moment_terms_sum_to_moment(small_problem):
    terms = moment_terms(small_problem)
    assert all(t.cumulant for t in terms)
    total = sum((t.weight for t in terms), 0 * ALPHA)
    assert total == moment(small_problem)
    assert len(moment_terms(small_problem, include_zero=True)) == 11


def test_moment_cap():
    problem = random_problem(7, 1, random.Random(1))
    with pytest.raises(CapExceededError):
        moment(problem)
    with pytest.raises(CapExceededError):
        moment(problem, EngineConfig(workers=2))


def test_moment_with_worker_pool():
    problem = random_problem(4, 2, random.Random(9))
    expected = moment(problem)
    assert moment(problem, EngineConfig(workers=2)) == expected
    assert moment(problem, EngineConfig(workers=3)) == expected
    with pytest.raises(ValueError):
        moment(problem, EngineConfig(workers=0))


# ============================================================================
# Нетрассовость состояния
# ============================================================================

def test_trace_defect_from_problem_files(problems_dir):
    forward = ProblemFile.load(problems_dir / "trace_defect_forward.json").to_problem()
    cyclic = ProblemFile.load(problems_dir / "trace_defect_cyclic.json").to_problem()
    assert cyclic_shift(forward, 1) == cyclic
    assert moment(forward) - moment(cyclic) == TRACE_DEFECT
    assert trace_defect(forward) == TRACE_DEFECT
    assert trace_defect(forward, method="oracle") == TRACE_DEFECT


def test_cyclic_shift_is_periodic(small_problem):
    assert cyclic_shift(small_problem, 3) == small_problem
    assert cyclic_shift(cyclic_shift(small_problem, 1), 2) == small_problem
    assert cyclic_shift(small_problem, 1).factors[0] == small_problem.factors[2]


# ============================================================================
# Частные случаи
# ============================================================================

@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_type_a_specialization(n, rng):
    problem = random_problem(n, 2, rng)
    assert specialized_moment(problem, "typeA") == moment(problem).specialize(alpha=0)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_gaussian_specialization(n, rng):
    problem = random_problem(n, 2, rng, gauge=False, lam=False)
    assert specialized_moment(problem, "gaussian") == moment(problem)
    if n % 2:
        assert moment(problem).is_zero()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_q_zero_specialization(n, rng):
    problem = random_problem(n, 2, rng, palindromic=True)
    assert specialized_moment(problem, "meixnerQ0") == moment(problem).specialize(q=0)


def test_specialization_preconditions(small_problem):
    zero = [[0, 0], [0, 0]]
    with_lambda = MomentProblem(2, (FactorSpec((1, 0), (0, 1), zero, zero, 1, 0),) * 2)
    with pytest.raises(PreconditionError):
        specialized_moment(small_problem, "gaussian")
    with pytest.raises(PreconditionError):
        specialized_moment(with_lambda, "gaussian")
    with pytest.raises(PreconditionError):
        specialized_moment(small_problem, "meixnerQ0")
    with pytest.raises(PreconditionError):
        specialized_moment(with_lambda, "meixnerQ0")
    with pytest.raises(ValueError):
        specialized_moment(small_problem, "q1")


# ============================================================================
# Формула Вика
# ============================================================================

@pytest.mark.parametrize("n", [1, 2, 3])
def test_wick_formula_for_every_word(n):
    rng = random.Random(100 + n)
    problem = random_problem(n, 2, rng)
    for eps in itertools.product(KINDS, repeat=n):
        assert wick_vector(eps, problem) == operator_word_vector(eps, problem), eps


def test_wick_terms_examples(small_problem):
    two = MomentProblem(2, small_problem.factors[:2])
    terms = wick_terms(["*", "*"], two)
    assert len(terms) == 1
    assert terms[0].coefficient.coefficient(0, 0) == Fraction(1)
    assert terms[0].state.max_level() == 2
    assert wick_vector(["*", "1"], two) == operator_word_vector(["create", "act"], two)


def test_wick_limits(small_problem):
    with pytest.raises(PreconditionError):
        wick_vector(["create"], small_problem)
    four = MomentProblem(2, small_problem.factors + small_problem.factors[:1])
    with pytest.raises(CapExceededError):
        wick_terms(["create"] * 4, four)
