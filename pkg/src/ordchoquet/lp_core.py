"""Exact rational simplex for the covering/packing pair behind the integral.

Covering (core) LP::

    min <f, x>   s.t.  x(F) >= v(F) for all F,  x >= 0

Packing LP::

    max <v, y>   s.t.  sum_F y_F 1_F <= f,  y >= 0

Both are solved by the same dense two-phase tableau simplex over exact
rationals (gmpy2 ``mpq`` inside the tableau when available, ``Fraction``
otherwise) with Bland's rule, each from its own formulation, and every
optimal answer is returned with a certificate for the other side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, InternalCheckFailed, NegativeWeighting
from .set_system import SetSystem
from .valuation import Valuation, as_fraction

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None = None
    primal_x: tuple[Fraction, ...] | None = None
    dual_y: tuple[Fraction, ...] | None = None
    pivots: int = 0


def _pivot(rows, obj, p, j):
    prow = rows[p]
    piv = prow[j]
    if piv != 1:
        inv = 1 / piv
        prow[:] = [a * inv if a else a for a in prow]
    nz = [(t, a) for t, a in enumerate(prow) if a]
    for k, row in enumerate(rows):
        if k != p:
            factor = row[j]
            if factor:
                for t, a in nz:
                    row[t] -= factor * a
    factor = obj[j]
    if factor:
        for t, a in nz:
            obj[t] -= factor * a


def _simplex(rows, basis, obj, allowed):
    """Bland-rule primal simplex maximising; ``obj`` holds reduced profits and -value."""
    pivots = 0
    while True:
        enter = next((j for j in allowed if obj[j] > 0), None)
        if enter is None:
            return OPTIMAL, pivots
        best = None
        for k, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                key = (row[-1] / a, basis[k])
                if best is None or key < best[0]:
                    best = (key, k)
        if best is None:
            return UNBOUNDED, pivots
        k = best[1]
        _pivot(rows, obj, k, enter)
        basis[k] = enter
        pivots += 1


def _q(x):
    if type(x) is not Fraction and type(x) is not int:
        x = as_fraction(x)
    return _Q(x) if type(x) is int else _Q(x.numerator, x.denominator)


def _fr(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _objective_row(rows, basis, cost, width):
    obj = list(cost) + [_Q(0)] * (width - len(cost))
    for k, row in enumerate(rows):
        cb = cost[basis[k]] if basis[k] < len(cost) else 0
        if cb:
            for t, a in enumerate(row):
                if a:
                    obj[t] -= cb * a
    return obj


def maximize(c: Sequence, a: Sequence[Sequence], b: Sequence):
    """Solve ``max c.x  s.t.  A x <= b, x >= 0`` exactly.

    Returns ``(status, value, x, u, pivots)`` where ``u >= 0`` are the row
    multipliers (an optimal solution of the dual ``min b.u, A^T u >= c``).
    Numbers come back as ``Fraction``.
    """
    c = [_q(t) for t in c]
    b = [_q(t) for t in b]
    zero, one = _Q(0), _Q(1)
    n, r = len(c), len(b)
    n_art = sum(1 for t in b if t < 0)
    width = n + r + n_art + 1
    rows, basis = [], []
    art = n + r
    for i in range(r):
        row = [_q(t) for t in a[i]]
        if len(row) != n:
            raise DimensionMismatch("constraint row has wrong length")
        row += [zero] * (r + n_art) + [b[i]]
        row[n + i] = one
        if b[i] < 0:
            row = [-t for t in row]
            row[art] = one
            basis.append(art)
            art += 1
        else:
            basis.append(n + i)
        rows.append(row)

    pivots = 0
    if n_art:
        cost1 = [zero] * (n + r) + [-one] * n_art
        obj = _objective_row(rows, basis, cost1, width)
        status, k = _simplex(rows, basis, obj, range(n + r + n_art))
        pivots += k
        if obj[-1] != 0:  # -value of phase 1 = sum of artificials
            return INFEASIBLE, None, None, None, pivots
        for k_row in range(len(rows)):
            if basis[k_row] >= n + r:
                j = next((t for t in range(n + r) if rows[k_row][t] != 0), None)
                if j is None:  # pragma: no cover - [A I] has full row rank
                    raise InternalCheckFailed("redundant row in phase 1")
                _pivot(rows, obj, k_row, j)
                basis[k_row] = j
                pivots += 1

    cost = c + [zero] * r
    obj = _objective_row(rows, basis, cost, width)
    status, k = _simplex(rows, basis, obj, range(n + r))
    pivots += k
    if status != OPTIMAL:
        return status, None, None, None, pivots
    x = [zero] * n
    for k_row, j in enumerate(basis):
        if j < n:
            x[j] = rows[k_row][-1]
    u = []
    for i in range(r):
        col = n + i
        u.append(sum((cost[basis[k_row]] * rows[k_row][col]
                      for k_row in range(len(rows)) if basis[k_row] < n + r), zero))
    value = sum((ci * xi for ci, xi in zip(c, x)), zero)
    return OPTIMAL, _fr(value), tuple(map(_fr, x)), tuple(map(_fr, u)), pivots


def _incidence(sys: SetSystem) -> list[list[int]]:
    """Rows = family members, columns = ground positions."""
    n = sys.n
    return [[(mk >> k) & 1 for k in range(n)] for mk in sys.masks]


def _weighting(sys: SetSystem, f) -> tuple[Fraction, ...]:
    f = tuple(as_fraction(t) for t in f)
    if len(f) != sys.n:
        raise DimensionMismatch(f"weighting has {len(f)} entries, ground set has {sys.n}")
    return f


def check_certificates(sys: SetSystem, v: Valuation, f, res: LPResult) -> bool:
    """Primal/dual feasibility, equal objectives and complementary slackness."""
    if res.status != OPTIMAL:
        return False
    f = [_q(t) for t in _weighting(sys, f)]
    x = [_q(t) for t in res.primal_x]
    y = [_q(t) for t in res.dual_y]
    vals = [_q(t) for t in v.values]
    zero = _Q(0)
    if any(t < 0 for t in x) or any(t < 0 for t in y):
        return False
    inc = _incidence(sys)
    cover = [sum((x[k] for k in range(sys.n) if row[k]), zero) for row in inc]
    if any(cover[i] < vals[i] for i in range(sys.m)):
        return False
    load = [sum((y[i] for i in range(sys.m) if inc[i][k]), zero) for k in range(sys.n)]
    if any(load[k] > f[k] for k in range(sys.n)):
        return False
    fx = sum((a * b for a, b in zip(f, x)), zero)
    vy = sum((a * b for a, b in zip(vals, y)), zero)
    if not (fx == vy == _q(res.value)):
        return False
    if any(y[i] and cover[i] != vals[i] for i in range(sys.m)):
        return False
    return all(not x[k] or load[k] == f[k] for k in range(sys.n))


def solve_core_min(sys: SetSystem, v: Valuation, f) -> LPResult:
    """``min <f, x>`` over the core of ``v``; ``dual_y`` is an optimal packing."""
    f = _weighting(sys, f)
    if any(t < 0 for t in f):
        raise NegativeWeighting("the covering LP needs f >= 0")
    inc = _incidence(sys)
    neg_rows = [[-t for t in row] for row in inc]
    status, val, x, u, piv = maximize([-t for t in f], neg_rows, [-t for t in v.values])
    if status == INFEASIBLE:  # pragma: no cover
        raise InternalCheckFailed("core LP reported infeasible")
    if status != OPTIMAL:  # pragma: no cover
        return LPResult(status, pivots=piv)
    res = LPResult(OPTIMAL, -val, x, u, piv)
    if not check_certificates(sys, v, f, res):  # pragma: no cover
        raise InternalCheckFailed("core LP certificates do not check out")
    return res


def solve_packing_max(sys: SetSystem, v: Valuation, f) -> LPResult:
    """``max <v, y>`` over packings below ``f``; ``primal_x`` is an optimal core point."""
    f = _weighting(sys, f)
    if any(t < 0 for t in f):
        raise NegativeWeighting("the packing LP needs f >= 0")
    inc = _incidence(sys)
    cols = [[inc[i][k] for i in range(sys.m)] for k in range(sys.n)]
    status, val, y, u, piv = maximize(v.values, cols, f)
    if status != OPTIMAL:  # pragma: no cover
        raise InternalCheckFailed(f"packing LP reported {status}")
    res = LPResult(OPTIMAL, val, u, y, piv)
    if not check_certificates(sys, v, f, res):  # pragma: no cover
        raise InternalCheckFailed("packing LP certificates do not check out")
    return res
