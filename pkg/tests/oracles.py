"""Independent brute-force oracles used to cross-validate the solvers.

Deliberately naive: full n**m assignment enumeration, no pruning, no reuse
of package internals beyond the plain data types.
"""

from fractions import Fraction
from itertools import product

F = Fraction


def naive_mms(values, n: int) -> Fraction:
    """min over all n**m assignments of the max bundle sum."""
    m = len(values)
    best = None
    for assign in product(range(n), repeat=m):
        loads = [F(0)] * n
        for j, b in enumerate(assign):
            loads[b] += values[j]
        worst = max(loads)
        if best is None or worst < best:
            best = worst
    return best if best is not None else F(0)


def naive_lex_key(values, n: int):
    """Lexicographically minimal sorted (descending) load vector."""
    m = len(values)
    best = None
    for assign in product(range(n), repeat=m):
        loads = [F(0)] * n
        for j, b in enumerate(assign):
            loads[b] += values[j]
        key = tuple(sorted(loads, reverse=True))
        if best is None or key < best:
            best = key
    return best
