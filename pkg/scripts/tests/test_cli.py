"""CLI typeb_cli.py: вывод, коды выхода, детерминизм"""

import json

import pytest

from typeb_fock.algebra import BivariatePoly
from utils.typeb_cli import main

TRACE_DEFECT_TEXT = "1*a^2*q^2 + 1*a^3 + -4*a^2 + 3*a + -1"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


# ============================================================================
# partitions / stats
# ============================================================================

def test_partitions_listing(capsys):
    code, out = run(capsys, "partitions", "--n", "2")
    assert code == 0
    assert sorted(out.splitlines()) == ["{(-2),(-1),(1),(2)}", "{(-2,-1),(1,2)}", "{(-2,1),(-1,2)}"]

    code, out = run(capsys, "partitions", "--n", "3", "--class", "A", "--stats")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert all(line.split("\t")[1] == "0" for line in lines)


def test_partitions_json(capsys):
    code, out = run(capsys, "--json", "partitions", "--n", "2", "--class", "ncB")
    data = json.loads(out)
    assert code == 0
    assert data["count"] == 3 and data["class"] == "ncB"


def test_partitions_errors(capsys):
    assert run(capsys, "partitions", "--n", "0")[0] == 1
    assert run(capsys, "partitions", "--n", "2", "--class", "C")[0] == 1
    assert run(capsys, "--partition-cap", "3", "partitions", "--n", "4")[0] == 1


def test_stats_command(capsys):
    code, out = run(capsys, "--json", "stats", "{(-4,1),(-1,4),(-3,-2),(2,3)}")
    assert code == 0
    data = json.loads(out)
    assert (data["na"], data["rc"], data["cs"]) == (1, 0, 0)
    assert "minmax" not in data

    code, out = run(capsys, "--json", "stats", "{(-10,-6,5),(-5,6,10),(-9,-8)E,(8,9)E,(-7,-4,-3,1),(-1,3,4,7),(-2),(2)}")
    assert code == 0
    assert json.loads(out)["minmax"] == 4

    assert run(capsys, "stats", "{(-1,1)}")[0] == 1


# ============================================================================
# moment / wick
# ============================================================================

def test_trace_defect_via_cli(capsys, problems_dir):
    forward = str(problems_dir / "trace_defect_forward.json")
    cyclic = str(problems_dir / "trace_defect_cyclic.json")
    code, out = run(capsys, "--json", "moment", forward, "--minus", cyclic)
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "equal"
    assert data["payload"]["combinatorial"] == TRACE_DEFECT_TEXT
    assert data["payload"]["oracle"] == TRACE_DEFECT_TEXT


def test_random_moment_and_specialization(capsys):
    code, out = run(capsys, "moment", "--random", "3,2", "--seed", "7", "--specialize", "1/2,1/3")
    assert code == 0
    assert "verdict: equal" in out.splitlines()
    assert any(line.startswith("combinatorial_at: ") for line in out.splitlines())


def test_moment_output_is_deterministic(capsys):
    first = run(capsys, "--quiet", "moment", "--random", "3,2", "--seed", "11", "--method", "combinatorial", "--terms")
    second = run(capsys, "--quiet", "--workers", "4", "moment", "--random", "3,2", "--seed", "11",
                 "--method", "combinatorial", "--terms")
    assert first == second


def test_moment_json_is_byte_identical(capsys, problems_dir):
    demo = str(problems_dir / "gauge_demo.json")
    first = run(capsys, "--json", "--quiet", "moment", demo)
    second = run(capsys, "--json", "--quiet", "--workers", "2", "moment", demo)
    assert first == second
    assert "seconds" not in json.loads(first[1])

    code, out = run(capsys, "--json", "--quiet", "--timing", "moment", demo)
    assert code == 0
    assert json.loads(out)["seconds"] >= 0


def test_workers_must_be_positive(capsys):
    assert run(capsys, "--workers", "0", "moment", "--random", "2,2")[0] == 1


def test_moment_mismatch_exit_code(capsys, problems_dir, monkeypatch):
    monkeypatch.setattr("typeb_fock.verification.vacuum_expectation_oracle", lambda factors: BivariatePoly.zero())
    forward = str(problems_dir / "trace_defect_forward.json")
    cyclic = str(problems_dir / "trace_defect_cyclic.json")
    code, out = run(capsys, "moment", forward, "--minus", cyclic)
    assert code == 2
    assert "verdict: mismatch" in out


def test_moment_input_errors(capsys, tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text('{"dimension": 2, "factors": []}', encoding="utf-8")
    assert run(capsys, "moment", str(empty))[0] == 1
    assert run(capsys, "moment", str(tmp_path / "missing.json"))[0] == 1
    assert run(capsys, "moment")[0] == 1
    assert run(capsys, "moment", "--random", "3")[0] == 1


def test_wick_command(capsys, problems_dir):
    code, out = run(capsys, "wick", "--eps", "create,gauge,act", "--random", "2", "--seed", "3")
    assert code == 0
    assert "verdict: equal" in out

    code, out = run(capsys, "--json", "wick", "--eps", "*,*", str(problems_dir / "gauge_demo.json"))
    assert code == 1

    code, out = run(capsys, "wick", "--eps", "create,jump", "--random", "2")
    assert code == 1


# ============================================================================
# symmetrizer / measure / norms
# ============================================================================

def test_symmetrizer_command(capsys):
    code, out = run(capsys, "--json", "symmetrizer", "--n", "2", "--alpha", "1", "--q", "0")
    data = json.loads(out)
    assert code == 0
    assert data["det_zero"] is True

    code, out = run(capsys, "symmetrizer", "--n", "2", "--d", "2", "--alpha", "0.5", "--q", "0.3", "--decomposition")
    assert code == 0
    assert "det_zero: False" in out
    assert "verdict: equal" in out


def test_measure_csv(capsys, tmp_path):
    code, out = run(capsys, "measure", "--alpha", "2", "--q", "0")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "x,density_closed_form,density_inversion,kind"
    assert len(lines) == 402
    assert lines[-1].endswith(",atom")

    code, out = run(capsys, "measure", "--alpha", "-0.5", "--q", "0")
    assert code == 0
    assert len(out.splitlines()) == 401

    target = tmp_path / "mu.csv"
    code, out = run(capsys, "measure", "--alpha", "0.5", "--q", "0.2", "--grid", "10", "--out", str(target))
    assert code == 0 and out == ""
    rows = target.read_text(encoding="utf-8").splitlines()
    assert len(rows) == 11
    assert rows[1].split(",")[1] == ""


def test_measure_rejects_alpha_below_minus_one(capsys):
    assert run(capsys, "measure", "--alpha", "-2")[0] == 1


def test_norms_command(capsys):
    code, out = run(capsys, "--json", "norms", "--alpha", "0.5", "--q", "-0.5",
                    "--x", "1,0", "--y", "3/5,4/5", "--max-level", "2", "--gauge")
    data = json.loads(out)
    assert code == 0
    assert data["region"] == "A"
    assert data["creation_norm"] == pytest.approx(1.18 ** 0.5, abs=1e-8)
    assert data["gauge_norm"] <= data["gauge_norm_bound"] + 1e-9

    assert run(capsys, "norms", "--alpha", "0", "--q", "0", "--x", "1,0", "--y", "1")[0] == 1


# ============================================================================
# argparse
# ============================================================================

def test_usage_errors_exit_with_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["partitions"])
    assert exc.value.code == 1
    assert main([]) == 1
