#!/usr/bin/env python3
"""Survey the bit-cost ledger over random instances.

Reports how often the DEA-OPTD return line is no more expensive than the
DEA-R one, and how the squared cost inequality splits by sign condition.
"""
import argparse
import collections
import random

from diophantine2 import cost
from diophantine2.core import Problem, euclid_trace


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=10_000)
    ap.add_argument("--bits", type=int, default=10)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--positive-c", action="store_true", help="draw c > 0 only")
    ap.add_argument("--csv", help="also write every ledger row to this file")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    hi = 2**args.bits
    ledgers = []
    while len(ledgers) < args.count:
        a, b = rng.randint(1, hi), rng.randint(1, hi)
        if a == b:
            continue
        c = rng.randint(1, hi) * (1 if args.positive_c else rng.choice((-1, 1)))
        p = Problem(max(a, b), min(a, b), c)
        t = euclid_trace(p)
        if t.solvable and t.halt_index >= 3:
            ledgers.append((f"{p.a}:{p.b}:{p.c}", cost.ledger(p)))

    steps = sum(len(l.steps) for _, l in ledgers)
    cheaper = sum(s.optd_cheaper for _, l in ledgers for s in l.steps)
    totals = sum(l.total_dea_optd <= l.total_dea_r for _, l in ledgers)
    by_cond = collections.Counter()
    for _, led in ledgers:
        for op, status in zip(led.operands, led.ineq17_status):
            by_cond[(cost.sign_condition(op), status.value)] += 1

    print(f"instances: {len(ledgers)}  ledger steps: {steps}")
    print(f"steps with DEA-OPTD cost <= DEA-R cost: {cheaper} ({100 * cheaper / steps:.1f}%)")
    print(f"instances with DEA-OPTD total <= DEA-R total: {totals} ({100 * totals / len(ledgers):.1f}%)")
    print("squared inequality by sign condition:")
    for (cond, status), n in sorted(by_cond.items(), key=lambda kv: (str(kv[0][0]), kv[0][1])):
        print(f"  condition={cond or '-'} {status:<6} {n}")
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(cost.ledger_to_csv(ledgers))


if __name__ == "__main__":
    main()
