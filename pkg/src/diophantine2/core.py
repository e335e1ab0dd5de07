"""Solvers for two-variable linear Diophantine equations a*x + b*y = c.

Three solvers walk the Euclid chain only as far as the first level where
``c - a_i`` is divisible by ``a_{i+1}`` (the halting index):

* :func:`dea_r`     - recursive, back-substitutes ``c`` at every level
* :func:`dea_optd`  - recursive, second-order recurrence on the quotients
* :func:`dea_optdi` - iterative form of ``dea_optd`` with a stored quotient list

:func:`dea_i` is the iterative form of ``dea_r``.  :func:`eea_i` and
:func:`eea_2` are extended-Euclid baselines that scale a Bezout pair by c/g.

All arithmetic is on Python ints (or any int-like type with floor division
and modulo, e.g. ``gmpy2.mpz``), so there is no overflow for any size.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Union


class DiophantineError(ValueError):
    """Base class for invalid-input errors."""


class ZeroInput(DiophantineError):
    pass


class EqualInputs(DiophantineError):
    pass


class NegativeCoefficient(DiophantineError):
    pass


class NotSolvable(DiophantineError):
    pass


class InternalInvariant(RuntimeError):
    """An exact division left a remainder. Never caused by valid input."""


@dataclass(frozen=True)
class Problem:
    """Validated triple with ``a > b >= 1`` and ``c != 0``."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0 or self.b == 0 or self.c == 0:
            raise ZeroInput(f"a, b, c must be nonzero, got {self.a}, {self.b}, {self.c}")
        if self.b < 0:
            raise NegativeCoefficient(f"b must be positive, got {self.b}")
        if not self.a > self.b:
            raise EqualInputs(f"need a > b, got a={self.a}, b={self.b}")


@dataclass(frozen=True)
class Solution:
    x: int
    y: int


@dataclass(frozen=True)
class NoSolution:
    g: int


Outcome = Union[Solution, NoSolution]


@dataclass(frozen=True)
class EuclidTrace:
    """Euclid chain a_1 > a_2 > ... with quotients q_i.

    ``halt_index`` is the 1-based i at which ``a_{i+1} | c - a_i`` first
    holds, and ``q_big`` is ``(c - a_i) / a_{i+1}`` there.  Both are None
    when gcd(a, b) does not divide c.
    """

    chain: list
    quotients: list
    halt_index: Optional[int] = None
    q_big: Optional[int] = None

    @property
    def solvable(self) -> bool:
        return self.halt_index is not None


def normalize_problem(a, b, c) -> tuple[Problem, bool]:
    """Order (a, b) so the larger comes first.

    Returns ``(problem, swapped)``; when ``swapped`` is true the caller must
    exchange x and y in any solution of ``problem``.
    """
    if a == 0 or b == 0 or c == 0:
        raise ZeroInput(f"a, b, c must be nonzero, got {a}, {b}, {c}")
    if a < 0 or b < 0:
        raise NegativeCoefficient(f"a and b must be positive, got {a}, {b}")
    if a == b:
        raise EqualInputs(f"a and b must differ, got {a}")
    if a > b:
        return Problem(a, b, c), False
    return Problem(b, a, c), True


def gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _exact_div(num, den):
    q, r = divmod(num, den)
    if r:
        raise InternalInvariant(f"{num} / {den} left remainder {r}")
    return q


def euclid_trace(p: Problem, full: bool = False) -> EuclidTrace:
    """Walk the Euclid chain of (p.a, p.b), locating the halting index.

    With ``full=False`` the walk stops at the halting index, so the chain ends
    at a_{i1+1}.  With ``full=True`` it always continues to remainder 0.
    """
    a, b, c = p.a, p.b, p.c
    chain = [a, b]
    quotients = []
    halt = q_big = None
    i = 1
    while b:
        if halt is None and (c - a) % b == 0:
            halt, q_big = i, (c - a) // b
            if not full:
                break
        q, r = divmod(a, b)
        quotients.append(q)
        chain.append(r)
        a, b = b, r
        i += 1
    return EuclidTrace(chain, quotients, halt, q_big)


# Recorders map call depth (1-based) to what that call saw and returned.

@dataclass(frozen=True)
class DeaRCall:
    a: int
    b: int
    value: int  # f(a, b) as returned by this call


@dataclass(frozen=True)
class OptdCall:
    a: int
    b: int
    f1: Optional[int]  # f(a_{j+2}, a_{j+3}); None for the base call
    f2: int            # f(a_{j+1}, a_{j+2}), or (c-a)/b for the base call
    floor: Optional[int]


def _dea_r_f(a, b, c, depth, record):
    if b == 0:
        if record is not None:
            record[depth] = None
        return NoSolution(a)
    if (c - a) % b == 0:
        y = _exact_div(c - a, b)
    else:
        inner = _dea_r_f(b, a % b, c, depth + 1, record)
        if isinstance(inner, NoSolution):
            return inner
        y = _exact_div(c - inner * a, b)
    if record is not None:
        record[depth] = DeaRCall(a, b, y)
    return y


def dea_r(p: Problem, record: Optional[dict] = None) -> Outcome:
    """Recursive solver computing y by back-substitution, then x = (c - b*y)/a.

    If ``record`` is a dict, each call stores a :class:`DeaRCall` under its
    depth (None for the terminating b = 0 call).
    """
    y = _dea_r_f(p.a, p.b, p.c, 1, record)
    if isinstance(y, NoSolution):
        return y
    return Solution(_exact_div(p.c - p.b * y, p.a), y)


def _dea_optd_f(a, b, c, depth, record):
    if b == 0:
        if record is not None:
            record[depth] = None
        return NoSolution(a)
    if (c - a) % b == 0:
        pair = (1, _exact_div(c - a, b))
        if record is not None:
            record[depth] = OptdCall(a, b, None, pair[1], None)
        return pair
    inner = _dea_optd_f(b, a % b, c, depth + 1, record)
    if isinstance(inner, NoSolution):
        return inner
    f1, f2 = inner
    q = a // b
    if record is not None:
        record[depth] = OptdCall(a, b, f1, f2, q)
    return f2, f1 - f2 * q


def dea_optd(p: Problem, record: Optional[dict] = None) -> Outcome:
    """Recursive solver returning (f(a_2, a_3), f(a_1, a_2)) = (x, y).

    The base call returns (1, Q); each outer level maps (f1, f2) to
    (f2, f1 - f2 * floor(a/b)), so ``c`` is never touched above the base.
    """
    pair = _dea_optd_f(p.a, p.b, p.c, 1, record)
    if isinstance(pair, NoSolution):
        return pair
    return Solution(*pair)


def dea_optdi(p: Problem, stats: Optional[dict] = None) -> Outcome:
    """Iterative form of :func:`dea_optd`.

    A forward loop stores floor(a/b) per level until ``b | c - a``; a backward
    sweep over the stored quotients then rebuilds (x, y) from (1, Q).
    """
    a, b, c = p.a, p.b, p.c
    floors = []
    while (c - a) % b:
        floors.append(a // b)
        a, b = b, a % b
        if b == 0:
            if stats is not None:
                stats["calls"] = len(floors) + 1
            return NoSolution(a)
    if stats is not None:
        stats["calls"] = len(floors) + 1
    f1, f2 = 1, (c - a) // b
    for q in reversed(floors):
        f1, f2 = f2, f1 - f2 * q
    return Solution(f1, f2)


def dea_i(p: Problem, stats: Optional[dict] = None) -> Outcome:
    """Iterative form of :func:`dea_r`: forward to the halting level, then
    back-substitute y_j = (c - y_{j+1} * a_j) / a_{j+1}."""
    a, b, c = p.a, p.b, p.c
    levels = []
    while (c - a) % b:
        levels.append((a, b))
        a, b = b, a % b
        if b == 0:
            if stats is not None:
                stats["calls"] = len(levels) + 1
            return NoSolution(a)
    if stats is not None:
        stats["calls"] = len(levels) + 1
    y = (c - a) // b
    for aj, bj in reversed(levels):
        y = (c - y * aj) // bj
    return Solution((c - p.b * y) // p.a, y)


def eea_i(p: Problem) -> Outcome:
    """Iterative extended Euclid tracking only the coefficient of a.

    The coefficient of b is back-solved from a*s + b*t = g after the loop.
    """
    a, b, c = p.a, p.b, p.c
    r0, r1 = a, b
    s0, s1 = 1, 0
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if c % r0:
        return NoSolution(r0)
    t = (r0 - a * s0) // b
    k = c // r0
    return Solution(s0 * k, t * k)


def eea_2(p: Problem) -> Outcome:
    """Tabular extended Euclid carrying both Bezout coefficients forward."""
    a, b, c = p.a, p.b, p.c
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if c % r0:
        return NoSolution(r0)
    k = c // r0
    return Solution(s0 * k, t0 * k)


def bezout(p: Problem) -> tuple:
    """(g, s, t) with a*s + b*t = g, as computed inside the EEA baselines."""
    r0, r1, s0, s1 = p.a, p.b, 1, 0
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return r0, s0, (r0 - p.a * s0) // p.b


ALGORITHMS: dict[str, Callable[[Problem], Outcome]] = {
    "dea-r": dea_r,
    "dea-optd": dea_optd,
    "dea-optdi": dea_optdi,
    "dea-i": dea_i,
    "eea-i": eea_i,
    "eea-2": eea_2,
}

DEA_FAMILY = ("dea-r", "dea-optd", "dea-optdi", "dea-i")


def solve(p: Problem, alg: str = "dea-optdi") -> Outcome:
    try:
        fn = ALGORITHMS[alg]
    except KeyError:
        raise ValueError(f"unknown algorithm {alg!r}; choose from {sorted(ALGORITHMS)}") from None
    return fn(p)


def verify(p: Problem, o: Outcome) -> bool:
    if isinstance(o, Solution):
        return p.a * o.x + p.b * o.y == p.c
    if isinstance(o, NoSolution):
        g = math.gcd(p.a, p.b)
        return o.g == g and p.c % g != 0
    return False


def general_solution(p: Problem, o: Outcome, t) -> tuple:
    """Member ``t`` of the solution family (x0 + (b/g) t, y0 - (a/g) t)."""
    if not isinstance(o, Solution):
        raise NotSolvable(f"{p} has no integer solution")
    g = math.gcd(p.a, p.b)
    return o.x + (p.b // g) * t, o.y - (p.a // g) * t


def recursion_count(p: Problem, alg: str) -> int:
    """Number of calls to f (DEA family) or Euclid steps (EEA family).

    EEA steps are counted like calls of recursive extended Euclid: one per
    division plus the terminating call with remainder 0.
    """
    if alg in ("dea-r", "dea-optd"):
        record: dict = {}
        ALGORITHMS[alg](p, record)
        return max(record)
    if alg in ("dea-optdi", "dea-i"):
        stats: dict = {}
        ALGORITHMS[alg](p, stats)
        return stats["calls"]
    if alg in ("eea-i", "eea-2"):
        return len(euclid_trace(p, full=True).quotients) + 1
    raise ValueError(f"unknown algorithm {alg!r}")
