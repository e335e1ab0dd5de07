import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from diophantine2 import cost
from diophantine2.core import NotSolvable, Problem, euclid_trace
from diophantine2.cost import (
    Ineq17,
    NotApplicable,
    bit_length,
    check_ineq17,
    cost_add,
    cost_mul,
    ledger,
)

import oracles


@pytest.mark.parametrize("v, n", [(1, 1), (0, 1), (-23, 5), (1024, 11), (-1, 1)])
def test_bit_length(v, n):
    assert bit_length(v) == n


@pytest.mark.parametrize("m, n, add, mul", [(1, 1, 2, 1), (3, 4, 7, 12), (10, 10, 20, 100)])
def test_cost_formulas(m, n, add, mul):
    assert cost_add(m, n) == add
    assert cost_mul(m, n) == mul


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_costs_symmetric(m, n):
    assert cost_add(m, n) == cost_add(n, m)
    assert cost_mul(m, n) == cost_mul(n, m)


def test_ledger_23_13_9_frozen():
    led = ledger(Problem(23, 13, 9))
    assert [(s.step_index, s.cost_dea_r, s.cost_dea_optd) for s in led.steps] == [(1, 79, 35), (2, 64, 29)]
    assert (led.total_dea_r, led.total_dea_optd) == (143, 64)
    assert all(s.optd_cheaper for s in led.steps)
    op1 = led.operands[0]
    assert (op1.a_j, op1.a_j1, op1.a_j2, op1.f_next, op1.f_next2, op1.floor) == (23, 13, 10, 23, -17, 1)


def independent_ledger(a, b, c):
    chain, i1, f = oracles.f_values_from_chain(a, b, c)
    rows = []
    for j in range(1, i1 - 1):
        aj, aj1 = chain[j - 1], chain[j]
        y = aj // aj1
        fn1, fn2 = f[j + 1], f[j + 2]
        b_ = oracles.bits
        r = b_(fn1) * b_(aj) + (b_(c) + b_(fn1 * aj)) + b_(c - fn1 * aj) * b_(aj1)
        o = b_(y) * b_(fn1) + (b_(fn2) + b_(y * fn1)) + b_(aj) * b_(aj1)
        rows.append((j, r, o))
    return rows


def test_ledger_matches_independent_recomputation_23_13_9():
    led = ledger(Problem(23, 13, 9))
    rows = independent_ledger(23, 13, 9)
    assert [(s.step_index, s.cost_dea_r, s.cost_dea_optd) for s in led.steps] == rows
    assert led.total_dea_r == sum(r for _, r, _ in rows)


@given(st.integers(2, 2**40), st.data())
def test_ledger_matches_independent_recomputation(a, data):
    b = data.draw(st.integers(1, a - 1))
    c = data.draw(st.integers(-2**40, 2**40).filter(bool))
    t = euclid_trace(Problem(a, b, c))
    assume(t.solvable and t.halt_index >= 3)
    led = ledger(Problem(a, b, c))
    assert [(s.step_index, s.cost_dea_r, s.cost_dea_optd) for s in led.steps] == independent_ledger(a, b, c)
    assert led.total_dea_r == sum(s.cost_dea_r for s in led.steps)
    assert led.total_dea_optd == sum(s.cost_dea_optd for s in led.steps)
    assert len(led.steps) == t.halt_index - 2
    for s in led.steps:
        assert s.cost_dea_r >= 0 and s.cost_dea_optd >= 0
        assert s.optd_cheaper == (s.cost_dea_optd <= s.cost_dea_r)


def test_ledger_not_applicable():
    with pytest.raises(NotApplicable):
        ledger(Problem(7, 3, 13))  # halts at the first call
    with pytest.raises(NotApplicable):
        ledger(Problem(5, 3, 1))  # halt index 2, empty range
    assert euclid_trace(Problem(5, 3, 1)).halt_index == 2


def test_ledger_unsolvable():
    with pytest.raises(NotSolvable):
        ledger(Problem(4, 2, 3))


def test_ledger_deterministic():
    p = Problem(1021, 389, 977)
    assert ledger(p) == ledger(p)


def test_check_ineq17_range():
    p = Problem(23, 13, 9)
    assert check_ineq17(p, 1) is Ineq17.HOLDS
    with pytest.raises(NotApplicable):
        check_ineq17(p, 3)
    with pytest.raises(NotApplicable):
        check_ineq17(p, 0)


def _find_step(cond, seed):
    rng = random.Random(seed)
    while True:
        a, b = rng.randint(2, 1024), rng.randint(1, 1024)
        if a <= b:
            continue
        c = rng.choice([-1, 1]) * rng.randint(1, 1024)
        t = euclid_trace(Problem(a, b, c))
        if not t.solvable or t.halt_index < 3:
            continue
        for op in cost.step_operands(Problem(a, b, c)):
            if cost.sign_condition(op) == cond:
                return Problem(a, b, c), op


def test_sign_condition_1_holds():
    p, op = _find_step(1, seed=11)
    assert p.c > 0 and op.f_next2 < 0
    assert check_ineq17(p, op.j) is Ineq17.HOLDS


def test_sign_condition_2_holds():
    p, op = _find_step(2, seed=12)
    assert p.c < 0 and op.f_next2 > 0
    assert check_ineq17(p, op.j) is Ineq17.HOLDS


def test_outside_sign_conditions_is_only_recorded():
    p, op = _find_step(None, seed=13)
    assert check_ineq17(p, op.j) in (Ineq17.HOLDS, Ineq17.FAILS)


@given(st.integers(3, 2**12), st.data())
def test_squared_expansion_consistent(a, data):
    b = data.draw(st.integers(1, a - 1))
    c = data.draw(st.integers(-2**12, 2**12).filter(bool))
    p = Problem(a, b, c)
    t = euclid_trace(p)
    assume(t.solvable and t.halt_index >= 3)
    for op in cost.step_operands(p):
        l_raw, r_raw = cost.raw_sides(op)
        l_sq, r_sq = cost.squared_sides(op)
        assert l_raw ** 2 == l_sq
        assert r_raw ** 2 == r_sq
        assert (l_raw <= r_raw) == (l_sq <= r_sq)
        # A + B collapses to c/a_j - f(a_{j+1}, a_{j+2})
        A, B, _ = cost._common(op)
        assert A + B == Fraction(op.c, op.a_j) - op.f_next


def test_ledger_csv():
    led = ledger(Problem(23, 13, 9))
    text = cost.ledger_to_csv([("23:13:9", led)])
    assert text.splitlines() == [
        "problem_id,j,cost_dea_r,cost_dea_optd,optd_cheaper,ineq17_status",
        "23:13:9,1,79,35,true,holds",
        "23:13:9,2,64,29,true,holds",
    ]
