"""Randomized timing comparison of the solvers.

Protocol: each repetition draws ``num_inputs`` triples with a, b, c uniform in
[1, value_max] (a == b redrawn, a < b swapped), times every configured
algorithm once per triple, and reports mean ticks per algorithm plus the
percentage of triples on which one algorithm is strictly faster than another.
"""
from __future__ import annotations

import csv
import gc
import hashlib
import io
import os
import random
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

import numpy as np

from .core import ALGORITHMS, Problem, normalize_problem
from .timers import Timer, TimerUnavailable, get_timer

DEFAULT_ALGORITHMS = ("dea-optdi", "dea-i", "eea-2", "eea-i")
COMPARISONS = (
    ("dea-optdi", "eea-i"),
    ("dea-optdi", "eea-2"),
    ("dea-i", "eea-i"),
    ("dea-i", "eea-2"),
)
DISPLAY = {
    "dea-r": "DEA-R",
    "dea-optd": "DEA-OPTD",
    "dea-optdi": "DEA-OPTDI",
    "dea-i": "DEA-I",
    "eea-i": "EEA-I",
    "eea-2": "EEA-2",
}
MEAN_CSV_HEADER = ["run_id", "algorithm", "mean_ticks"]
COMPARISON_CSV_HEADER = ["run_id", "comparison", "pct_better"]


class ConfigError(ValueError):
    pass


class MissingTiming(KeyError):
    pass


class EmptyReports(ValueError):
    pass


def _int64(v):
    return np.int64(v)


def _mpz(v):
    import gmpy2

    return gmpy2.mpz(v)


INT_BACKENDS: dict[str, Callable] = {
    "python": int,
    "gmpy2": _mpz,
    "int64": _int64,
}


@dataclass(frozen=True)
class BenchConfig:
    num_inputs: int = 100_000
    value_max: int = 2**10
    repetitions: int = 10
    seed: int = 0
    algorithms: tuple = DEFAULT_ALGORITHMS
    warmup: bool = True
    timer_backend: str = "auto"
    # "python" and "gmpy2" are arbitrary precision; "int64" is fixed width
    int_backend: str = "python"
    pin_cpu: bool = True

    def __post_init__(self):
        if self.num_inputs < 1:
            raise ConfigError(f"num_inputs must be >= 1, got {self.num_inputs}")
        if self.value_max < 2:
            raise ConfigError(f"value_max must be >= 2, got {self.value_max}")
        if self.repetitions < 1:
            raise ConfigError(f"repetitions must be >= 1, got {self.repetitions}")
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must be a 64-bit unsigned value, got {self.seed}")
        if not self.algorithms:
            raise ConfigError("at least one algorithm is required")
        unknown = [a for a in self.algorithms if a not in ALGORITHMS]
        if unknown:
            raise ConfigError(f"unknown algorithms {unknown}")
        if self.int_backend not in INT_BACKENDS:
            raise ConfigError(f"unknown int_backend {self.int_backend!r}")
        if self.int_backend == "int64" and self.value_max >= 2**31:
            raise ConfigError("int64 backend needs value_max < 2**31 to rule out overflow")


_BOOL = {"1": True, "true": True, "yes": True, "on": True,
         "0": False, "false": False, "no": False, "off": False}


def parse_config_text(text: str) -> dict:
    """Parse ``key=value`` lines (``#`` comments) into BenchConfig keyword args."""
    out: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        try:
            if key in ("num_inputs", "value_max", "repetitions", "seed"):
                out[key] = int(value, 0)
            elif key in ("warmup", "pin_cpu"):
                out[key] = _BOOL[value.lower()]
            elif key in ("timer_backend", "int_backend"):
                out[key] = value
            elif key == "algorithms":
                out[key] = tuple(s.strip() for s in value.split(",") if s.strip())
            else:
                raise ConfigError(f"line {lineno}: unknown key {key!r}")
        except (ValueError, KeyError) as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"line {lineno}: bad value for {key}: {value!r}") from None
    return out


def load_config(path) -> dict:
    with open(path) as fh:
        return parse_config_text(fh.read())


@dataclass
class Sample:
    problem: Problem
    ticks: dict


@dataclass
class BenchReport:
    run_id: int
    num_inputs: int
    mean_ticks: dict
    pct_better: dict
    win_counts: dict  # (A, B) -> (A faster, B faster, ties)
    inputs_sha256: str
    config: dict
    timer: dict
    samples: Optional[list] = field(default=None, repr=False, compare=False)


def _rng_for(seed: int, run: int) -> random.Random:
    state = np.random.SeedSequence([seed, run]).generate_state(4, dtype=np.uint32)
    return random.Random(int.from_bytes(state.tobytes(), "little"))


def generate_inputs(cfg: BenchConfig, run: int = 0) -> list:
    """Inputs for repetition ``run``; identical for identical (seed, run)."""
    rng = _rng_for(cfg.seed, run)
    conv = INT_BACKENDS[cfg.int_backend]
    hi = cfg.value_max
    problems = []
    for _ in range(cfg.num_inputs):
        a = rng.randint(1, hi)
        b = rng.randint(1, hi)
        while a == b:
            a = rng.randint(1, hi)
            b = rng.randint(1, hi)
        c = rng.randint(1, hi)
        p, _swapped = normalize_problem(a, b, c)
        if conv is not int:
            p = Problem(conv(p.a), conv(p.b), conv(p.c))
        problems.append(p)
    return problems


def inputs_digest(problems) -> str:
    h = hashlib.sha256()
    for p in problems:
        h.update(f"{int(p.a)},{int(p.b)},{int(p.c)}\n".encode())
    return h.hexdigest()


# Every timed outcome is written here so the call has an observable effect.
_SINK: list = [None]


def timed_call(fn, p, read):
    t0 = read()
    out = fn(p)
    t1 = read()
    _SINK[0] = out
    return t1 - t0, out


def time_algorithm(alg: str, p: Problem, timer: Optional[Timer] = None, warmup: bool = True) -> int:
    """Ticks for one invocation of ``alg`` on ``p``."""
    timer = timer or get_timer()
    fn = ALGORITHMS[alg]
    if warmup:
        fn(p)
    ticks, _ = timed_call(fn, p, timer.read)
    return ticks


@contextmanager
def pinned_cpu(enabled: bool = True):
    """Pin the process to the CPU it is running on, where the OS allows it."""
    if not enabled or not hasattr(os, "sched_setaffinity"):
        yield None
        return
    try:
        before = os.sched_getaffinity(0)
        cpu = min(before)
        os.sched_setaffinity(0, {cpu})
    except OSError:
        yield None
        return
    try:
        yield cpu
    finally:
        try:
            os.sched_setaffinity(0, before)
        except OSError:
            pass


def measure(problems, algorithms, timer: Timer, warmup: bool = True) -> list:
    read = timer.read
    fns = [(name, ALGORITHMS[name]) for name in algorithms]
    samples = []
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for p in problems:
            ticks = {}
            for name, fn in fns:
                if warmup:
                    fn(p)
                ticks[name] = timed_call(fn, p, read)[0]
            samples.append(Sample(p, ticks))
    finally:
        if gc_was_enabled:
            gc.enable()
    return samples


def win_counts(samples, alg_a: str, alg_b: str) -> tuple:
    wins = losses = ties = 0
    for s in samples:
        try:
            ta, tb = s.ticks[alg_a], s.ticks[alg_b]
        except KeyError as exc:
            raise MissingTiming(f"sample for {s.problem} has no timing for {exc.args[0]}") from None
        if ta < tb:
            wins += 1
        elif tb < ta:
            losses += 1
        else:
            ties += 1
    return wins, losses, ties


def pairwise_wins(samples, alg_a: str, alg_b: str) -> float:
    """Percentage of samples where ``alg_a`` took strictly fewer ticks, to 0.1."""
    if not samples:
        raise ValueError("no samples")
    wins, _, _ = win_counts(samples, alg_a, alg_b)
    return round(100.0 * wins / len(samples), 1)


def summarize(samples, algorithms, run_id: int, config: dict, timer_meta: dict,
              digest: str, keep_samples: bool = False) -> BenchReport:
    n = len(samples)
    means = {alg: sum(s.ticks[alg] for s in samples) / n for alg in algorithms}
    pairs = [(a, b) for a, b in COMPARISONS if a in algorithms and b in algorithms]
    counts = {pair: win_counts(samples, *pair) for pair in pairs}
    pct = {pair: round(100.0 * counts[pair][0] / n, 1) for pair in pairs}
    return BenchReport(run_id, n, means, pct, counts, digest, config, timer_meta,
                       samples if keep_samples else None)


def run_benchmark(cfg: BenchConfig, timer: Optional[Timer] = None, keep_samples: bool = False,
                  progress: Optional[Callable[[int, int], None]] = None) -> list:
    timer = timer or get_timer(cfg.timer_backend)
    echo = asdict(cfg)
    echo["algorithms"] = list(cfg.algorithms)
    reports = []
    with pinned_cpu(cfg.pin_cpu) as cpu:
        meta = dict(timer.metadata(), pinned_cpu=cpu, warmup=cfg.warmup,
                    int_backend=cfg.int_backend)
        for run in range(cfg.repetitions):
            problems = generate_inputs(cfg, run)
            samples = measure(problems, cfg.algorithms, timer, cfg.warmup)
            reports.append(summarize(samples, cfg.algorithms, run + 1, echo, meta,
                                     inputs_digest(problems), keep_samples))
            if progress is not None:
                progress(run + 1, cfg.repetitions)
    return reports


def _comparison_name(pair) -> str:
    return f"{DISPLAY[pair[0]]} vs {DISPLAY[pair[1]]}"


def emit_report(reports, fmt: str = "csv") -> str:
    if not reports:
        raise EmptyReports("no reports to emit")
    if fmt == "csv":
        return _emit_csv(reports)
    if fmt == "markdown":
        return _emit_markdown(reports)
    raise ValueError(f"unknown format {fmt!r}")


def _emit_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(MEAN_CSV_HEADER)
    for r in reports:
        for alg, mean in r.mean_ticks.items():
            w.writerow([r.run_id, DISPLAY[alg], f"{mean:.1f}"])
    buf.write("\n")
    w.writerow(COMPARISON_CSV_HEADER)
    for r in reports:
        for pair, pct in r.pct_better.items():
            w.writerow([r.run_id, _comparison_name(pair), f"{pct:.1f}"])
    return buf.getvalue()


def _md_table(header, rows) -> list:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(row) + " |" for row in rows]
    return lines


def _emit_markdown(reports) -> str:
    first = reports[0]
    unit = first.timer.get("tick_unit", "ticks")
    algs = list(first.mean_ticks)
    lines = [f"### Mean {unit} per call", ""]
    lines += _md_table([DISPLAY[a] for a in algs],
                       [[f"{r.mean_ticks[a]:.1f}" for a in algs] for r in reports])
    pairs = list(first.pct_better)
    lines += ["", "### Percentage of inputs on which the first algorithm is faster", ""]
    if pairs:
        lines += _md_table([_comparison_name(p) for p in pairs],
                           [[f"{r.pct_better[p]:.1f}" for p in pairs] for r in reports])
    else:
        lines.append("(no comparable pairs among the configured algorithms)")
    return "\n".join(lines) + "\n"


__all__ = [
    "BenchConfig", "BenchReport", "ConfigError", "EmptyReports", "MissingTiming", "Sample",
    "TimerUnavailable", "emit_report", "generate_inputs", "load_config", "pairwise_wins",
    "parse_config_text", "run_benchmark", "time_algorithm",
]
