"""Independent reference computations, deliberately naive and separate from the package."""
import math


def brute_force_solutions(a, b, c, bound=10):
    return {(x, y) for x in range(-bound, bound + 1) for y in range(-bound, bound + 1)
            if a * x + b * y == c}


def solvable(a, b, c):
    return c % math.gcd(a, b) == 0


def egcd_calls(a, b):
    """Calls made by textbook recursive extended Euclid, including the b == 0 call."""
    return 1 if b == 0 else 1 + egcd_calls(b, a % b)


def euclid_chain(a, b):
    chain = [a, b]
    while chain[-1]:
        chain.append(chain[-2] % chain[-1])
    return chain


def first_halt(a, b, c):
    """Smallest 1-based i with a_{i+1} | c - a_i, or None."""
    chain = euclid_chain(a, b)
    for i in range(len(chain) - 1):
        if chain[i + 1] and (c - chain[i]) % chain[i + 1] == 0:
            return i + 1
    return None


def f_values_from_chain(a, b, c):
    """f(a_j, a_{j+1}) for j = 1..i1, rebuilt bottom-up from the chain alone.

    Uses f(a_{i1}) = (c - a_{i1}) / a_{i1+1} and then the DEA-R definition
    f_j = (c - f_{j+1} a_j) / a_{j+1} with plain integer division checks.
    """
    chain = euclid_chain(a, b)
    i1 = first_halt(a, b, c)
    if i1 is None:
        return None
    f = {}
    num = c - chain[i1 - 1]
    assert num % chain[i1] == 0
    f[i1] = num // chain[i1]
    for j in range(i1 - 1, 0, -1):
        num = c - f[j + 1] * chain[j - 1]
        assert num % chain[j] == 0
        f[j] = num // chain[j]
    return chain, i1, f


def bits(v):
    v = abs(v)
    return v.bit_length() if v else 1
