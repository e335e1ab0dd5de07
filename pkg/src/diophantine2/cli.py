"""Command-line front end.

Exit codes: 0 solution (or success), 1 no solution, 2 usage / invalid input,
3 timer unavailable.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench, cost
from .core import (
    ALGORITHMS,
    DiophantineError,
    NoSolution,
    dea_r,
    euclid_trace,
    normalize_problem,
    solve,
)
from .timers import TimerUnavailable

EXIT_OK, EXIT_NO_SOLUTION, EXIT_USAGE, EXIT_ENV = 0, 1, 2, 3


def _problem(args, out):
    p, swapped = normalize_problem(args.a, args.b, args.c)
    if swapped:
        print(f"note: inputs reordered to a={p.a} b={p.b}; x and y are swapped back in the answer",
              file=out)
    return p, swapped


def _no_solution_line(g) -> str:
    return f"no solution: {g} is the gcd of the inputs and it does not divide c"


def cmd_solve(args, out=None) -> int:
    out = out or sys.stdout
    p, swapped = _problem(args, out)
    o = solve(p, args.alg)
    if isinstance(o, NoSolution):
        print(_no_solution_line(o.g), file=out)
        return EXIT_NO_SOLUTION
    x, y = (o.y, o.x) if swapped else (o.x, o.y)
    # check against the equation as typed, not the normalized one
    lhs = args.a * x + args.b * y
    if lhs != args.c:
        raise AssertionError(f"{args.alg} produced a wrong answer ({x}, {y})")
    print(f"x={x} y={y}", file=out)
    print(f"check: {args.a}*({x}) + {args.b}*({y}) = {lhs}", file=out)
    return EXIT_OK


def cmd_trace(args, out=None) -> int:
    out = out or sys.stdout
    p, _ = _problem(args, out)
    t = euclid_trace(p)
    print("chain: " + ",".join(str(v) for v in t.chain), file=out)
    print("quotients: " + ",".join(str(v) for v in t.quotients), file=out)
    if not t.solvable:
        print(f"no halting index; gcd={t.chain[-2]}", file=out)
        return EXIT_NO_SOLUTION
    print(f"halt={t.halt_index} Q={t.q_big}", file=out)
    record: dict = {}
    dea_r(p, record)
    for depth in sorted(record):
        call = record[depth]
        print(f"  f({call.a},{call.b}) = {call.value}", file=out)
    return EXIT_OK


def cmd_cost_compare(args, out=None) -> int:
    out = out or sys.stdout
    p, _ = _problem(args, out)
    try:
        led = cost.ledger(p)
    except cost.NotApplicable as exc:
        print(f"not applicable: {exc}", file=out)
        return EXIT_OK
    except DiophantineError:
        g = euclid_trace(p).chain[-2]
        print(_no_solution_line(g), file=out)
        return EXIT_NO_SOLUTION
    if args.csv:
        out.write(cost.ledger_to_csv([(f"{p.a}:{p.b}:{p.c}", led)]))
        return EXIT_OK
    print(f"{'j':>4} {'DEA-R':>8} {'DEA-OPTD':>9} {'optd<=r':>8}  ineq17  sign", file=out)
    for step, op, status in zip(led.steps, led.operands, led.ineq17_status):
        sign = cost.sign_condition(op) or "-"
        print(f"{step.step_index:>4} {step.cost_dea_r:>8} {step.cost_dea_optd:>9} "
              f"{str(step.optd_cheaper).lower():>8}  {status.value:<6}  {sign}", file=out)
    print(f"total DEA-R={led.total_dea_r} DEA-OPTD={led.total_dea_optd}", file=out)
    return EXIT_OK


def _bench_config(args) -> bench.BenchConfig:
    kwargs = bench.load_config(args.config) if args.config else {}
    for flag, key in (("n", "num_inputs"), ("max", "value_max"), ("reps", "repetitions"),
                      ("seed", "seed"), ("timer", "timer_backend"), ("int_backend", "int_backend")):
        value = getattr(args, flag)
        if value is not None:
            kwargs[key] = value
    if args.algs:
        kwargs["algorithms"] = tuple(a.strip() for a in args.algs.split(",") if a.strip())
    if args.no_warmup:
        kwargs["warmup"] = False
    if args.no_pin:
        kwargs["pin_cpu"] = False
    return bench.BenchConfig(**kwargs)


def cmd_bench(args, out=None) -> int:
    out = out or sys.stdout
    try:
        cfg = _bench_config(args)
    except (bench.ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        reports = bench.run_benchmark(
            cfg, progress=lambda i, n: print(f"run {i}/{n} done", file=sys.stderr))
    except TimerUnavailable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENV
    if args.out:
        fmt = "markdown" if Path(args.out).suffix.lower() in (".md", ".markdown") else "csv"
        Path(args.out).write_text(bench.emit_report(reports, fmt))
    if args.md:
        Path(args.md).write_text(bench.emit_report(reports, "markdown"))
    out.write(bench.emit_report(reports, "markdown"))
    print(f"timer: {reports[0].timer}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diophantine2",
                                     description="Solve a*x + b*y = c and benchmark the solvers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def abc(p):
        p.add_argument("a", type=int)
        p.add_argument("b", type=int)
        p.add_argument("c", type=int)

    p = sub.add_parser("solve", help="find one integer solution")
    abc(p)
    p.add_argument("--alg", choices=sorted(ALGORITHMS), default="dea-optdi")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("trace", help="show the Euclid chain and halting index")
    abc(p)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("cost-compare", help="bit-cost ledger of DEA-R vs DEA-OPTD")
    abc(p)
    p.add_argument("--csv", action="store_true", help="emit the ledger as CSV")
    p.set_defaults(func=cmd_cost_compare)

    p = sub.add_parser("bench", help="run the randomized timing comparison")
    p.add_argument("--n", type=int, help="inputs per repetition (default 100000)")
    p.add_argument("--max", type=int, help="largest value of a, b, c (default 1024)")
    p.add_argument("--reps", type=int, help="repetitions (default 10)")
    p.add_argument("--seed", type=int)
    p.add_argument("--algs", help="comma-separated algorithm ids")
    p.add_argument("--timer", choices=["auto", "tsc", "monotonic"])
    p.add_argument("--int-backend", dest="int_backend", choices=sorted(bench.INT_BACKENDS))
    p.add_argument("--config", help="key=value config file")
    p.add_argument("--no-warmup", action="store_true")
    p.add_argument("--no-pin", action="store_true")
    p.add_argument("--out", help="write CSV (or markdown for .md) to this path")
    p.add_argument("--md", help="also write markdown tables to this path")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except DiophantineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
