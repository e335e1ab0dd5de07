"""Bit-size cost accounting for the recursive return lines of DEA-R and DEA-OPTD.

At recursion level j (1 <= j <= i1 - 2) the two solvers compute the same
value f(a_j, a_{j+1}) in different ways::

    DEA-R     (c - f(a_{j+1}, a_{j+2}) * a_j) / a_{j+1}
    DEA-OPTD  f(a_{j+2}, a_{j+3}) - floor(a_j / a_{j+1}) * f(a_{j+1}, a_{j+2})

Each side is charged one subtraction, one division and one multiplication,
with add/sub of an m-bit and n-bit operand costing m + n and mul/div costing
m * n.  Assignments are free.  Operand sizes come from instrumented runs.

The inequality checker evaluates the squared closed form of "DEA-OPTD is no
more expensive" exactly over rationals, with every log2|v| replaced by
``bit_length(v)``.
"""
from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .core import NotSolvable, Problem, dea_optd, dea_r, euclid_trace


class NotApplicable(ValueError):
    """No level executes the recursive return line of both solvers."""


class Ineq17(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not-applicable"


def bit_length(v) -> int:
    """Bits of |v|, with bit_length(0) == 1 so every operand has a size."""
    return max(int(v).bit_length(), 1)


def cost_add(m: int, n: int) -> int:
    return m + n


def cost_mul(m: int, n: int) -> int:
    return m * n


@dataclass(frozen=True)
class StepOperands:
    """Values seen at level j.  ``f_next`` is f(a_{j+1}, a_{j+2}),
    ``f_next2`` is f(a_{j+2}, a_{j+3}) and ``floor`` is floor(a_j / a_{j+1})."""

    j: int
    a_j: int
    a_j1: int
    a_j2: int
    c: int
    f_next: int
    f_next2: int
    floor: int


@dataclass(frozen=True)
class StepCost:
    step_index: int
    cost_dea_r: int
    cost_dea_optd: int

    @property
    def optd_cheaper(self) -> bool:
        return self.cost_dea_optd <= self.cost_dea_r


@dataclass(frozen=True)
class CostLedger:
    problem: Problem
    steps: list
    operands: list
    total_dea_r: int
    total_dea_optd: int
    ineq17_status: list


def dea_r_step_cost(f_next, a_j, a_j1, c) -> int:
    prod = f_next * a_j
    return (cost_mul(bit_length(f_next), bit_length(a_j))
            + cost_add(bit_length(c), bit_length(prod))
            + cost_mul(bit_length(c - prod), bit_length(a_j1)))


def dea_optd_step_cost(f_next2, f_next, floor, a_j, a_j1) -> int:
    prod = floor * f_next
    return (cost_mul(bit_length(floor), bit_length(f_next))
            + cost_add(bit_length(f_next2), bit_length(prod))
            + cost_mul(bit_length(a_j), bit_length(a_j1)))


def _common(op: StepOperands):
    # A = (c a_{j+2} - c a_j) / (a_j a_{j+2}),  B = f(a_{j+2}, a_{j+3}) a_{j+1} / a_{j+2}
    A = Fraction(op.c * op.a_j2 - op.c * op.a_j, op.a_j * op.a_j2)
    B = Fraction(op.f_next2 * op.a_j1, op.a_j2)
    ratio = Fraction(op.floor, op.a_j)
    return A, B, ratio


def raw_sides(op: StepOperands) -> tuple:
    """Unsquared sides |F (y/a_j)^(1+L(x))| and |c (A + B)^L(a_{j+1})|."""
    A, B, ratio = _common(op)
    lhs = abs(op.f_next2 * ratio ** (1 + bit_length(op.f_next)))
    rhs = abs(op.c * (A + B) ** bit_length(op.a_j1))
    return lhs, rhs


def squared_sides(op: StepOperands) -> tuple:
    """Squared sides with the right-hand square expanded as A^2 + B^2 + 2AB."""
    A, B, ratio = _common(op)
    lhs = (op.f_next2 * ratio ** (1 + bit_length(op.f_next))) ** 2
    rhs = op.c ** 2 * (A * A + B * B + 2 * A * B) ** bit_length(op.a_j1)
    return lhs, rhs


def evaluate_ineq17(op: StepOperands) -> Ineq17:
    lhs, rhs = squared_sides(op)
    return Ineq17.HOLDS if lhs <= rhs else Ineq17.FAILS


def sign_condition(op: StepOperands) -> Optional[int]:
    """1 if c > 0 and f(a_{j+2}, a_{j+3}) < 0, 2 if c < 0 and it is > 0, else None."""
    if op.c > 0 and op.f_next2 < 0:
        return 1
    if op.c < 0 and op.f_next2 > 0:
        return 2
    return None


def step_operands(p: Problem) -> list:
    """Operands of every ledger level, read from instrumented DEA-R and DEA-OPTD runs."""
    trace = euclid_trace(p)
    if not trace.solvable:
        raise NotSolvable(f"{p} has no integer solution")
    i1 = trace.halt_index
    if i1 < 3:
        raise NotApplicable(f"halting index {i1} < 3 for {p}")
    r_rec: dict = {}
    o_rec: dict = {}
    dea_r(p, r_rec)
    dea_optd(p, o_rec)
    ops = []
    for j in range(1, i1 - 1):
        rj, rj1, oj = r_rec[j], r_rec[j + 1], o_rec[j]
        ops.append(StepOperands(
            j=j, a_j=rj.a, a_j1=rj.b, a_j2=rj1.b, c=p.c,
            f_next=rj1.value, f_next2=oj.f1, floor=oj.floor,
        ))
    return ops


def ledger(p: Problem) -> CostLedger:
    ops = step_operands(p)
    steps = [
        StepCost(
            op.j,
            dea_r_step_cost(op.f_next, op.a_j, op.a_j1, op.c),
            dea_optd_step_cost(op.f_next2, op.f_next, op.floor, op.a_j, op.a_j1),
        )
        for op in ops
    ]
    return CostLedger(
        problem=p,
        steps=steps,
        operands=ops,
        total_dea_r=sum(s.cost_dea_r for s in steps),
        total_dea_optd=sum(s.cost_dea_optd for s in steps),
        ineq17_status=[evaluate_ineq17(op) for op in ops],
    )


def check_ineq17(p: Problem, j: int) -> Ineq17:
    led = ledger(p)
    if not 1 <= j <= len(led.steps):
        raise NotApplicable(f"level {j} outside ledger range 1..{len(led.steps)}")
    return led.ineq17_status[j - 1]


LEDGER_CSV_HEADER = ["problem_id", "j", "cost_dea_r", "cost_dea_optd", "optd_cheaper", "ineq17_status"]


def ledger_to_csv(ledgers: Iterable[tuple]) -> str:
    """CSV text for ``(problem_id, CostLedger)`` pairs."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(LEDGER_CSV_HEADER)
    for pid, led in ledgers:
        for step, status in zip(led.steps, led.ineq17_status):
            w.writerow([pid, step.step_index, step.cost_dea_r, step.cost_dea_optd,
                        str(step.optd_cheaper).lower(), status.value])
    return buf.getvalue()
