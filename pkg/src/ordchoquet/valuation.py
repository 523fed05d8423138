"""Valuations on an ordered system, with exact rational arithmetic.

A valuation assigns a rational to every member of the family (``v(empty)``
is implicitly 0).  Its coordinates in the incidence basis
``zeta^1..zeta^m`` are obtained by Moebius inversion, ``beta = v Z^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import kernels
from .errors import ChoquetError, DimensionMismatch, NegativeDensity, NotConsecutive
from .set_system import SetSystem

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(x) -> Fraction:
    """Exact conversion; strings may be ``"p/q"`` or decimals, floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, np.integer):
        return Fraction(int(x))
    raise TypeError(f"cannot convert {type(x).__name__} {x!r} exactly to a rational")


class Valuation:
    """Immutable vector of rationals indexed by the family of ``sys``."""

    __slots__ = ("sys", "values")

    def __init__(self, sys: SetSystem, values: Iterable):
        values = tuple(as_fraction(x) for x in values)
        if len(values) != sys.m:
            raise DimensionMismatch(f"valuation has {len(values)} entries, family has {sys.m}")
        self.sys = sys
        self.values = values

    @classmethod
    def zeros(cls, sys: SetSystem) -> "Valuation":
        return cls(sys, (ZERO,) * sys.m)

    @classmethod
    def from_sets(cls, sys: SetSystem, mapping: Mapping[Iterable, object]) -> "Valuation":
        """Build from ``{labels: value}``; unlisted members get 0."""
        vals = [ZERO] * sys.m
        for labels, x in mapping.items():
            vals[sys.index(labels)] = as_fraction(x)
        return cls(sys, vals)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def _check(self, other):
        if not isinstance(other, Valuation):
            return NotImplemented
        if other.sys is not self.sys:
            raise ChoquetError("valuations live on different systems")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Valuation(self.sys, (a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Valuation(self.sys, (a - b for a, b in zip(self.values, other.values)))

    def __neg__(self):
        return Valuation(self.sys, (-a for a in self.values))

    def __mul__(self, scalar):
        c = as_fraction(scalar)
        return Valuation(self.sys, (c * a for a in self.values))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Valuation):
            return NotImplemented
        return other.sys is self.sys and other.values == self.values

    def __hash__(self):
        return hash((id(self.sys), self.values))

    def __repr__(self):
        body = ", ".join(f"{self.sys.name(i)}: {x}" for i, x in enumerate(self.values))
        return f"Valuation({{{body}}})"


@dataclass(frozen=True)
class BeliefDecomposition:
    beta: tuple[Fraction, ...]
    v_plus: Valuation
    v_minus: Valuation


@dataclass(frozen=True)
class Verdict:
    """Boolean outcome of a predicate together with the first violation found."""

    ok: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def mobius_inverse(v: Valuation) -> tuple[Fraction, ...]:
    """Coordinates ``beta`` of ``v`` in the incidence basis (``v = sum beta_i zeta^i``)."""
    vals = v.values
    return tuple(
        sum((vals[i] * c for i, c in col), ZERO) for col in v.sys.mobius_columns
    )


def combine(sys: SetSystem, beta: Sequence) -> Valuation:
    """``sum_i beta_i zeta^i``: the valuation with incidence coordinates ``beta``."""
    beta = [as_fraction(b) for b in beta]
    if len(beta) != sys.m:
        raise DimensionMismatch("coefficient vector has wrong length")
    return Valuation(sys, (sum((beta[i] for i in sys.below[j]), ZERO) for j in range(sys.m)))


def cumulative(w: Valuation) -> Valuation:
    """Cumulative function ``w_hat(F) = sum_{F' <= F} w(F')`` of a density."""
    neg = [i for i, x in enumerate(w.values) if x < 0]
    if neg:
        raise NegativeDensity(f"density is negative at {w.sys.name(neg[0])}")
    return combine(w.sys, w.values)


def is_belief(v: Valuation) -> bool:
    return all(b >= 0 for b in mobius_inverse(v))


def decompose(v: Valuation) -> BeliefDecomposition:
    """Split ``v = v_plus - v_minus`` by the signs of its incidence coordinates."""
    beta = mobius_inverse(v)
    plus = [b if b > 0 else ZERO for b in beta]
    minus = [-b if b < 0 else ZERO for b in beta]
    return BeliefDecomposition(beta, combine(v.sys, plus), combine(v.sys, minus))


def simple_function(sys: SetSystem, i: int) -> Valuation:
    """``zeta^i``: indicator of the upper interval ``[F_i)`` (row i of Z), 0-based."""
    if not 0 <= i < sys.m:
        raise IndexError(f"simple function index {i} out of range 0..{sys.m - 1}")
    return Valuation(sys, (int(z) for z in sys.zeta[i]))


def is_capacity(v: Valuation) -> bool:
    """Non-negative and isotone along the order."""
    vals = v.values
    if any(x < 0 for x in vals):
        return False
    return all(vals[i] <= vals[j] for j in range(v.sys.m) for i in v.sys.below[j])


def co_intersecting_pairs(sys: SetSystem) -> list[tuple[int, int]]:
    """Pairs ``i < j`` for which some ``F_k``, ``k <= i``, meets both sets."""
    ok = kernels.co_intersecting(sys.mask_array)
    return [(int(i), int(j)) for i, j in np.argwhere(np.triu(ok, k=1))]


def meet_join_candidates(sys: SetSystem, i: int, j: int) -> tuple[list[int], list[int]]:
    """Candidate meets (with -1 standing for the empty set) and joins inside ``F_i | F_j``."""
    union = sys.masks[i] | sys.masks[j]
    inside = kernels.subset_of(sys.mask_array, union)
    leq = sys.leq
    meets = [-1] + np.flatnonzero(inside & leq[:, i] & leq[:, j]).tolist()
    joins = np.flatnonzero(inside & leq[i] & leq[j]).tolist()
    return meets, joins


def is_supermodular_ordered(v: Valuation) -> Verdict:
    """Supermodularity on a consecutive system.

    Every co-intersecting pair must admit a meet and a join inside
    ``F_0(F | G)`` with ``v(meet) + v(join) >= v(F) + v(G)``; the empty
    set is always an admissible meet with value 0.  The witness is the first
    failing pair in index order.
    """
    sys = v.sys
    if kernels.consecutive_witness(sys.mask_array, np.ascontiguousarray(sys.leq))[0] >= 0:
        raise NotConsecutive("supermodularity is defined for consecutive systems only")
    vals = v.values
    for i, j in co_intersecting_pairs(sys):
        meets, joins = meet_join_candidates(sys, i, j)
        if not joins:
            return Verdict(False, (i, j))
        best_meet = max(vals[k] if k >= 0 else ZERO for k in meets)
        best_join = max(vals[k] for k in joins)
        if best_meet + best_join < vals[i] + vals[j]:
            return Verdict(False, (i, j))
    return Verdict(True)


def is_supermodular_boolean(vhat: Sequence, n: int | None = None) -> Verdict:
    """Lattice supermodularity of a set function given as a table over all masks."""
    size = len(vhat)
    if n is None:
        n = size.bit_length() - 1
    if size != 1 << n:
        raise DimensionMismatch("set function table must have 2^n entries")
    if vhat[0] != 0:
        raise ChoquetError("set function must vanish on the empty set")
    for a in range(size):
        for b in range(a + 1, size):
            if vhat[a | b] + vhat[a & b] < vhat[a] + vhat[b]:
                return Verdict(False, (a, b))
    return Verdict(True)
