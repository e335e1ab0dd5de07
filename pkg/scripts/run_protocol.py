#!/usr/bin/env python3
"""Run the randomized timing comparison and write CSV, markdown and JSON results.

    python scripts/run_protocol.py                  # 10 x 100000 inputs in [1, 1024]
    python scripts/run_protocol.py --n 5000 --reps 2 --int-backend gmpy2
"""
import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

from diophantine2.bench import BenchConfig, INT_BACKENDS, emit_report, run_benchmark


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=100_000)
    ap.add_argument("--max", type=int, default=2**10)
    ap.add_argument("--reps", type=int, default=10)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--int-backend", default="python", choices=sorted(INT_BACKENDS))
    ap.add_argument("--timer", default="auto", choices=["auto", "tsc", "monotonic"])
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()

    cfg = BenchConfig(num_inputs=args.n, value_max=args.max, repetitions=args.reps, seed=args.seed,
                      int_backend=args.int_backend, timer_backend=args.timer)
    reports = run_benchmark(cfg, progress=lambda i, n: print(f"run {i}/{n}", file=sys.stderr))

    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    stem = f"protocol_{args.int_backend}_seed{args.seed}"
    (out / f"{stem}.csv").write_text(emit_report(reports, "csv"))
    md = emit_report(reports, "markdown")
    (out / f"{stem}.md").write_text(md)
    payload = []
    for r in reports:
        d = asdict(r)
        d.pop("samples")
        d["pct_better"] = {f"{a} vs {b}": v for (a, b), v in r.pct_better.items()}
        d["win_counts"] = {f"{a} vs {b}": v for (a, b), v in r.win_counts.items()}
        payload.append(d)
    (out / f"{stem}.json").write_text(json.dumps(payload, indent=2))
    print(md)
    print(f"wrote {out}/{stem}.{{csv,md,json}}")


if __name__ == "__main__":
    main()
