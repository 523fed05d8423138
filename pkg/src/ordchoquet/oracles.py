"""Brute-force reference computations used to cross-check the main paths.

None of these share code with the routines they check: Moebius coordinates
by bottom-up recursion instead of the inverse matrix, the classical Moebius
transform by inclusion-exclusion, and LP optima by enumerating vertices.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .set_system import SetSystem
from .valuation import ZERO, Valuation


def mobius_recursive(v: Valuation) -> list[Fraction]:
    """``beta(F) = v(F) - sum of beta over strict predecessors``, bottom-up."""
    sys = v.sys
    beta = [ZERO] * sys.m
    for j in range(sys.m - 1, -1, -1):
        acc = v[j]
        for i in range(sys.m):
            if i != j and sys.leq[i, j]:
                acc -= beta[i]
        beta[j] = acc
    return beta


def classical_mobius(vhat, n: int) -> list[Fraction]:
    """Inclusion-exclusion transform on ``2^N``."""
    out = []
    for a in range(1 << n):
        total = ZERO
        b = a
        while True:
            sign = -1 if bin(a & ~b).count("1") % 2 else 1
            total += sign * Fraction(vhat[b])
            if b == 0:
                break
            b = (b - 1) & a
        out.append(total)
    return out


def _solve(mat, rhs):
    """Gauss-Jordan over Fractions; None when singular."""
    k = len(mat)
    aug = [list(map(Fraction, row)) + [Fraction(r)] for row, r in zip(mat, rhs)]
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [t / p for t in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                fac = aug[r][col]
                aug[r] = [a - fac * b for a, b in zip(aug[r], aug[col])]
    return [row[-1] for row in aug]


def core_min_by_vertices(sys: SetSystem, v: Valuation, f) -> Fraction:
    """Minimum of ``<f, x>`` over the core of ``v`` by visiting every vertex.

    Constraints are ``x(F) >= v(F)`` and ``x_k >= 0``; a vertex is a feasible
    point where ``n`` linearly independent constraints are tight.
    """
    n = sys.n
    cons = []
    for i, mk in enumerate(sys.masks):
        cons.append(([(mk >> k) & 1 for k in range(n)], v[i]))
    for k in range(n):
        cons.append(([1 if t == k else 0 for t in range(n)], ZERO))
    best = None
    for subset in combinations(range(len(cons)), n):
        x = _solve([cons[t][0] for t in subset], [cons[t][1] for t in subset])
        if x is None:
            continue
        if all(sum((a * b for a, b in zip(row, x)), ZERO) >= rhs for row, rhs in cons):
            val = sum((Fraction(a) * b for a, b in zip(f, x)), ZERO)
            if best is None or val < best:
                best = val
    return best
