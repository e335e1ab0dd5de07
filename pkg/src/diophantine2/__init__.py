"""Two-variable linear Diophantine solvers, a bit-cost model and a timing harness."""
from .core import (
    ALGORITHMS,
    DiophantineError,
    EqualInputs,
    EuclidTrace,
    InternalInvariant,
    NegativeCoefficient,
    NoSolution,
    NotSolvable,
    Outcome,
    Problem,
    Solution,
    ZeroInput,
    dea_i,
    dea_optd,
    dea_optdi,
    dea_r,
    eea_2,
    eea_i,
    euclid_trace,
    gcd,
    general_solution,
    normalize_problem,
    recursion_count,
    solve,
    verify,
)

__version__ = "0.1.0"
