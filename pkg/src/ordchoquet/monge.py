"""Monge (greedy) algorithm for ordered systems and its correctness certificate.

Each round takes the lowest-indexed member ``M`` still inside the live
set ``X``, saturates an element ``p`` of ``M`` with least residual weight,
books that weight on ``y_M``, subtracts it from ``M`` and drops ``p`` from
``X``.  The resulting packing ``y`` is always feasible; whether it is optimal
for every valuation is decided by :func:`certify`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from . import kernels, lp_core
from .choquet import weighting
from .errors import InternalCheckFailed, NegativeWeighting
from .set_system import SetSystem, bits
from .valuation import ZERO, Valuation, simple_function

#: Process-wide tally of Monge runs and of feasibility checks they passed.
RUN_STATS: Counter = Counter()


@dataclass(frozen=True)
class MongeRound:
    chosen: int
    element: int
    weight: Fraction
    residual: tuple[Fraction, ...]


@dataclass(frozen=True)
class MongeOutput:
    chosen_sets: tuple[int, ...]
    y: tuple[Fraction, ...]
    pi: tuple[int, ...]
    residual: tuple[Fraction, ...]
    rounds: tuple[MongeRound, ...] = field(default=(), repr=False)

    def to_dict(self, sys: SetSystem) -> dict:
        from .io import render

        return {
            "chosen_sets": [sys.name(i) for i in self.chosen_sets],
            "pi": [sys.ground.elements[p] for p in self.pi],
            "y": {sys.name(i): render(t) for i, t in enumerate(self.y) if t},
            "rounds": [
                {
                    "M": sys.name(r.chosen),
                    "p": sys.ground.elements[r.element],
                    "c_p": render(r.weight),
                    "c": [render(t) for t in r.residual],
                }
                for r in self.rounds
            ],
        }


def run(sys: SetSystem, f) -> MongeOutput:
    """Run the Monge algorithm on ``f >= 0``.

    Ties for ``p`` go to the earliest ground element.  ``y`` accumulates
    per selection event, although a member can never be selected twice:
    its saturated element leaves ``X`` with it.
    """
    c = list(weighting(f, sys.n))
    if any(t < 0 for t in c):
        raise NegativeWeighting("the Monge algorithm needs f >= 0")
    masks = sys.mask_array
    x = sys.ground.full
    y = [ZERO] * sys.m
    chosen, pi, rounds = [], [], []
    while True:
        live = kernels.subset_of(masks, x)
        if not live.any():
            break
        i = int(live.argmax())
        members = bits(sys.masks[i])
        p = min(members, key=lambda k: (c[k], k))
        cp = c[p]
        y[i] += cp
        for k in members:
            c[k] -= cp
        x &= ~(1 << p)
        chosen.append(i)
        pi.append(p)
        rounds.append(MongeRound(i, p, cp, tuple(c)))
    out = MongeOutput(tuple(chosen), tuple(y), tuple(pi), tuple(c), tuple(rounds))
    RUN_STATS["runs"] += 1
    if not is_feasible(sys, out, f):  # pragma: no cover
        raise InternalCheckFailed("Monge output is not a feasible packing")
    RUN_STATS["feasible"] += 1
    return out


def is_feasible(sys: SetSystem, out: MongeOutput, f) -> bool:
    """``y >= 0`` and ``sum_F y_F 1_F <= f``, plus the bookkeeping invariants."""
    f = weighting(f, sys.n)
    if any(t < 0 for t in out.y):
        return False
    for k in range(sys.n):
        load = sum((out.y[i] for i, mk in enumerate(sys.masks) if mk >> k & 1), ZERO)
        if load > f[k]:
            return False
    return len(out.chosen_sets) == len(out.pi) <= sys.n and len(set(out.pi)) == len(out.pi)


def monge_functional(out: MongeOutput, v: Valuation) -> Fraction:
    """``[f](v) = <v, y>``."""
    return sum((a * b for a, b in zip(v.values, out.y) if b), ZERO)


@dataclass(frozen=True)
class Certificate:
    ok: bool
    output: MongeOutput
    monge_values: tuple[Fraction, ...]
    lp_values: tuple[Fraction, ...]

    @property
    def failures(self) -> tuple[int, ...]:
        return tuple(i for i, (a, b) in enumerate(zip(self.monge_values, self.lp_values)) if a != b)

    @property
    def witness(self) -> int | None:
        bad = self.failures
        return bad[0] if bad else None

    def __bool__(self):
        return self.ok


def certify(sys: SetSystem, f, out: MongeOutput | None = None) -> Certificate:
    """Compare the Monge value with the LP integral for every simple function.

    Agreement on all ``zeta^i`` means the Monge packing is optimal for every
    valuation at this ``f``.
    """
    f = weighting(f, sys.n)
    if out is None:
        out = run(sys, f)
    mv, lv = [], []
    for i in range(sys.m):
        z = simple_function(sys, i)
        mv.append(monge_functional(out, z))
        lv.append(lp_core.solve_packing_max(sys, z, f).value)
    return Certificate(mv == lv, out, tuple(mv), tuple(lv))


def forest_parents(sys: SetSystem, out: MongeOutput) -> list[int | None]:
    """Father of each chosen set in ``(M, inclusion)``: its smallest strict superset.

    Returns positions into ``out.chosen_sets``.  Raises if the strict
    supersets of some node do not form a chain (then it is not a forest).
    """
    masks = [sys.masks[i] for i in out.chosen_sets]
    parents = []
    for t, mk in enumerate(masks):
        sup = [s for s, other in enumerate(masks) if s != t and mk & ~other == 0]
        for a in sup:
            for b in sup:
                ma, mb = masks[a], masks[b]
                if ma & ~mb and mb & ~ma:
                    raise InternalCheckFailed("chosen sets do not form a forest")
        parents.append(min(sup, key=lambda s: bin(masks[s]).count("1")) if sup else None)
    return parents


def children_disjoint(sys: SetSystem, out: MongeOutput) -> bool:
    parents = forest_parents(sys, out)
    masks = [sys.masks[i] for i in out.chosen_sets]
    for node in set(parents) | {None}:
        acc = 0
        for t, par in enumerate(parents):
            if par == node:
                if acc & masks[t]:
                    return False
                acc |= masks[t]
    return True


def father_formula(sys: SetSystem, out: MongeOutput, f, v: Valuation) -> Fraction:
    """``sum_i (f_{p_i} - f_{p_father(i)}) v(M_i)`` with 0 for roots."""
    f = weighting(f, sys.n)
    parents = forest_parents(sys, out)
    total = ZERO
    for t, i in enumerate(out.chosen_sets):
        par = parents[t]
        top = f[out.pi[par]] if par is not None else ZERO
        total += (f[out.pi[t]] - top) * v[i]
    return total
