"""Файл задачи, модели данных, конфигурация и VerificationPipeline"""

import json
from fractions import Fraction

import pytest

from typeb_fock.config import DEFAULT_CONFIG, EngineConfig
from typeb_fock.exceptions import CapExceededError, DimensionMismatchError, PreconditionError, ProblemFileError
from typeb_fock.models import FactorSpec, MomentProblem, OperatorKind, ProblemFile, Report, Verdict
from typeb_fock.verification import VerificationPipeline

EYE = [["1", "0"], ["0", "1"]]


def factor_json(**overrides):
    data = {"x_left": ["1", "0"], "x_right": ["0", "1"], "T_left": EYE, "T_right": EYE}
    data.update(overrides)
    return data


# ============================================================================
# ProblemFile
# ============================================================================

def test_problem_file_normalizes_rationals():
    text = json.dumps({"dimension": 2, "factors": [factor_json(x_left=["2/4", 3], lam_right="0.25")]})
    pf = ProblemFile.loads(text)
    assert pf.factors[0].x_left == ["1/2", "3"]
    assert pf.factors[0].lam_left == "0"
    assert pf.factors[0].lam_right == "1/4"

    problem = pf.to_problem()
    assert problem.n == 1
    assert problem.x(-1) == (Fraction(1, 2), Fraction(3))
    assert problem.lam(1) == Fraction(1, 4)


@pytest.mark.parametrize("data", [
    {"dimension": 2, "factors": []},
    {"dimension": 0, "factors": [factor_json()]},
    {"dimension": 2, "factors": [factor_json(x_right=["1"])]},
    {"dimension": 2, "factors": [factor_json(T_left=[["1", "0"]])]},
    {"dimension": 2, "factors": [factor_json(lam_left="1/0")]},
    {"dimension": 2, "factors": [factor_json(x_left=["a", "0"])]},
    {"dimension": 2},
])
def test_problem_file_schema_errors(data):
    with pytest.raises(ProblemFileError):
        ProblemFile.loads(json.dumps(data))


def test_problem_file_io_errors(tmp_path):
    with pytest.raises(ProblemFileError):
        ProblemFile.loads("{not json")
    with pytest.raises(ProblemFileError):
        ProblemFile.load(tmp_path / "absent.json")


def test_problem_file_from_problem(tmp_path, problems_dir):
    original = ProblemFile.load(problems_dir / "gauge_demo.json")
    problem = original.to_problem()
    restored = ProblemFile.from_problem(problem, description=original.description)
    assert restored == original

    target = tmp_path / "copy.json"
    restored.dump(target)
    assert ProblemFile.load(target).to_problem() == problem
    assert "description" not in ProblemFile.from_problem(problem).dumps()


# ============================================================================
# Модели данных
# ============================================================================

def test_factor_spec_checks_shapes():
    with pytest.raises(DimensionMismatchError):
        FactorSpec((1, 0), (1, 0, 0), [[1, 0], [0, 1]], [[1, 0], [0, 1]])
    with pytest.raises(DimensionMismatchError):
        FactorSpec((1, 0), (1, 0), [[1, 0]], [[1, 0], [0, 1]])


def test_moment_problem_checks():
    f2 = FactorSpec((1, 0), (0, 1), [[1, 0], [0, 1]], [[1, 0], [0, 1]])
    f1 = FactorSpec((1,), (1,), [[1]], [[1]])
    with pytest.raises(PreconditionError):
        MomentProblem(2, ())
    with pytest.raises(DimensionMismatchError):
        MomentProblem(2, (f2, f1))
    problem = MomentProblem(2, [f2])
    assert problem.factors == (f2,)
    with pytest.raises(IndexError):
        problem.factor(2)
    assert f2.is_palindromic() is False
    assert FactorSpec((1, 2), (1, 2), [[0, 1], [1, 0]], [[0, 1], [1, 0]]).is_palindromic()


def test_operator_kind_parse():
    assert OperatorKind.parse("*") is OperatorKind.CREATE
    assert OperatorKind.parse(" 1 ") is OperatorKind.ACT
    assert OperatorKind.parse("E") is OperatorKind.GAUGE
    assert OperatorKind.parse("Gauge") is OperatorKind.GAUGE
    assert OperatorKind.CREATE.symbol == "*"
    with pytest.raises(ValueError):
        OperatorKind.parse("jump")


def test_report_to_dict():
    report = Report(command="moment", payload={"combinatorial": "1"}, verdict=Verdict.EQUAL)
    data = report.to_dict()
    assert data["verdict"] == "equal"
    assert data["payload"] == {"combinatorial": "1"}
    assert Report(command="stats").to_dict()["verdict"] is None
    assert "seconds" not in data
    assert Report(command="moment", seconds=1.5).to_dict(timing=True)["seconds"] == 1.5


# ============================================================================
# Конфигурация
# ============================================================================

def test_config_defaults():
    assert DEFAULT_CONFIG.partition_cap == 6
    assert DEFAULT_CONFIG.wick_cap == 3
    assert DEFAULT_CONFIG.dense_basis_cap == 20000
    assert 3 ** 8 <= DEFAULT_CONFIG.dense_basis_cap < 2 ** 16
    assert DEFAULT_CONFIG.cf_depth == 200
    assert DEFAULT_CONFIG.workers == 1


def test_config_from_env():
    config = EngineConfig.from_env({"TYPEB_PARTITION_CAP": "7", "TYPEB_STIELTJES_EPS": "1e-4",
                                    "TYPEB_WORKERS": "3", "OTHER": "x"})
    assert config.partition_cap == 7
    assert config.workers == 3
    assert config.stieltjes_eps == pytest.approx(1e-4)
    assert config.wick_cap == DEFAULT_CONFIG.wick_cap
    with pytest.raises(ValueError):
        EngineConfig.from_env({"TYPEB_CF_DEPTH": "deep"})


def test_config_from_process_environment(monkeypatch):
    monkeypatch.setenv("TYPEB_WICK_CAP", "4")
    assert EngineConfig.from_env().wick_cap == 4


def test_config_overrides_ignore_none():
    config = DEFAULT_CONFIG.with_overrides(partition_cap=None, wick_cap=2)
    assert config.partition_cap == DEFAULT_CONFIG.partition_cap
    assert config.wick_cap == 2
    assert DEFAULT_CONFIG.wick_cap == 3


# ============================================================================
# VerificationPipeline
# ============================================================================

def test_pipeline_statistics(problems_dir):
    pipeline = VerificationPipeline()
    problem = ProblemFile.load(problems_dir / "gauge_demo.json").to_problem()
    report = pipeline.compute_moment(problem)
    assert report.verdict is Verdict.EQUAL
    assert report.payload["combinatorial"] == report.payload["oracle"]

    report = pipeline.verify_decomposition(1, 2, seed=5)
    assert report.verdict is Verdict.EQUAL
    assert report.payload["words"] == 4

    stats = pipeline.get_statistics()
    assert stats["runs"] == 2 and stats["equal"] == 2 and stats["mismatches"] == 0
    assert stats["oracle_evaluations"] == 1
    assert stats["words_checked"] == 4
    assert "runs=2" in repr(pipeline)


def test_pipeline_single_method(problems_dir):
    problem = ProblemFile.load(problems_dir / "gauge_demo.json").to_problem()
    report = VerificationPipeline().compute_moment(problem, method="combinatorial", specialize=("1/2", "0"))
    assert report.verdict is None
    assert "oracle" not in report.payload
    assert report.payload["alpha"] == "1/2"
    assert "combinatorial_at" in report.payload


def test_pipeline_decomposition_cap():
    with pytest.raises(CapExceededError):
        VerificationPipeline().verify_decomposition(8, 2)
    small = VerificationPipeline(EngineConfig(dense_basis_cap=10))
    with pytest.raises(CapExceededError):
        small.verify_decomposition(2, 2)
