import csv
import io
import subprocess
import sys

import pytest

from diophantine2.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_solve_dea_optdi():
    code, text = run("solve", "5", "3", "1", "--alg", "dea-optdi")
    assert code == 0
    assert text.splitlines()[0] == "x=-1 y=2"
    assert "= 1" in text.splitlines()[1]


def test_solve_no_solution():
    code, text = run("solve", "4", "2", "3", "--alg", "dea-r")
    assert code == 1
    assert "no solution" in text and "2 is the gcd" in text


@pytest.mark.parametrize("argv", [
    ("solve", "5", "0", "1"),
    ("solve", "4", "4", "6"),
    ("solve", "-5", "3", "1"),
    ("solve", "5", "3", "x"),
    ("solve", "5", "3", "1", "--alg", "nope"),
    ("trace", "5", "3", "0"),
])
def test_solve_invalid_input(argv):
    code, _ = run(*argv)
    assert code == 2


@pytest.mark.parametrize("alg", ["dea-r", "dea-optd", "dea-optdi", "dea-i", "eea-i", "eea-2"])
def test_solve_swapped_inputs(alg):
    code, text = run("solve", "3", "5", "-4", "--alg", alg)
    assert code == 0
    line = [l for l in text.splitlines() if l.startswith("x=")][0]
    x, y = (int(part.split("=")[1]) for part in line.split())
    assert 3 * x + 5 * y == -4
    assert "reordered" in text


def test_trace_23_13_9():
    code, text = run("trace", "23", "13", "9")
    assert code == 0
    assert "chain: 23,13,10,3,1" in text
    assert "halt=4 Q=6" in text
    assert "f(23,13) = -40" in text


def test_trace_7_3_13():
    code, text = run("trace", "7", "3", "13")
    assert "halt=1 Q=2" in text


def test_trace_no_solution():
    code, text = run("trace", "4", "2", "3")
    assert code == 1
    assert "no halting index; gcd=2" in text


def test_cost_compare():
    code, text = run("cost-compare", "23", "13", "9")
    assert code == 0
    rows = [l for l in text.splitlines() if l.strip() and l.split()[0].isdigit()]
    assert len(rows) == 2
    assert "total DEA-R=143 DEA-OPTD=64" in text


def test_cost_compare_csv():
    code, text = run("cost-compare", "23", "13", "9", "--csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0][0] == "problem_id" and len(rows) == 3


def test_cost_compare_not_applicable_and_unsolvable():
    code, text = run("cost-compare", "7", "3", "13")
    assert code == 0 and "not applicable" in text
    code, text = run("cost-compare", "4", "2", "3")
    assert code == 1 and "no solution" in text


def test_bench_writes_csv(tmp_path):
    out = tmp_path / "report.csv"
    md = tmp_path / "report.md"
    code, text = run("bench", "--n", "1000", "--max", "1024", "--reps", "2", "--seed", "7",
                     "--out", str(out), "--md", str(md))
    assert code == 0
    mean_part, cmp_part = out.read_text().split("\n\n")
    assert len(mean_part.strip().splitlines()) == 1 + 2 * 4
    assert len(cmp_part.strip().splitlines()) == 1 + 2 * 4
    assert "| DEA-OPTDI | DEA-I | EEA-2 | EEA-I |" in md.read_text()


def test_bench_config_file_and_flags(tmp_path):
    conf = tmp_path / "bench.conf"
    conf.write_text("num_inputs=50\nrepetitions=3\nseed=1\nwarmup=false\ntimer_backend=monotonic\n")
    out = tmp_path / "r.csv"
    code, _ = run("bench", "--config", str(conf), "--reps", "1", "--out", str(out))
    assert code == 0
    assert out.read_text().count("DEA-OPTDI vs EEA-I") == 1


@pytest.mark.parametrize("argv", [("bench", "--reps", "0"), ("bench", "--n", "ten"),
                                  ("bench", "--config", "/nonexistent/file")])
def test_bench_bad_flags(argv):
    code, _ = run(*argv)
    assert code == 2


def test_bench_timer_failure_exit_3(monkeypatch):
    from diophantine2 import bench, timers

    def boom(backend="auto"):
        raise timers.TimerUnavailable("no clock")

    monkeypatch.setattr(bench, "get_timer", boom)
    code, _ = run("bench", "--n", "10", "--reps", "1")
    assert code == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "diophantine2", "solve", "23", "13", "9"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "x=23 y=-40"
