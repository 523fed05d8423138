"""The general Choquet integral on ordered systems and its classical relatives.

For a belief function the integral is the optimum of the covering LP (equal
to the packing LP by duality); an arbitrary valuation is integrated through
its decomposition ``v = v_plus - v_minus`` into belief functions.  Set
functions on ``2^N`` are tables indexed by bitmask.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import lp_core
from .errors import (
    ChoquetError,
    DimensionMismatch,
    InternalCheckFailed,
    NegativeWeighting,
    NotAnAlgebra,
    NotAProbability,
    NotContainmentOrder,
)
from .set_system import SetSystem, bits, classify, is_weakly_union_closed, maximal_in_mask
from .valuation import ONE, ZERO, Valuation, as_fraction, decompose, is_belief, mobius_inverse

Weighting = tuple[Fraction, ...]


def weighting(values: Sequence, n: int | None = None) -> Weighting:
    f = tuple(as_fraction(t) for t in values)
    if n is not None and len(f) != n:
        raise DimensionMismatch(f"weighting has {len(f)} entries, expected {n}")
    return f


def indicator(sys: SetSystem, mask: int) -> Weighting:
    return tuple(Fraction((mask >> k) & 1) for k in range(sys.n))


@dataclass(frozen=True)
class IntegralResult:
    value: Fraction
    method: str
    dual_y: tuple[Fraction, ...] | None = None
    primal_x: tuple[Fraction, ...] | None = None
    shift: Fraction = ZERO
    shift_dependent: bool = False


def _nonneg(sys: SetSystem, f) -> Weighting:
    f = weighting(f, sys.n)
    if any(t < 0 for t in f):
        raise NegativeWeighting("weighting has negative entries; use integral_shifted")
    return f


def belief_integral(sys: SetSystem, v: Valuation, f, via: str = "packing") -> lp_core.LPResult:
    """LP value of a belief function (no belief check).

    ``via="packing"`` solves the packing LP (n rows), ``via="core"`` the
    covering LP (m rows); both carry certificates for the other side.
    """
    if via == "core":
        return lp_core.solve_core_min(sys, v, f)
    if via == "packing":
        return lp_core.solve_packing_max(sys, v, f)
    raise ChoquetError(f"unknown LP route {via!r}")


def integral(sys: SetSystem, v: Valuation, f, via: str = "packing") -> IntegralResult:
    """``int_F f dv`` for ``f >= 0`` and any valuation ``v``.

    Belief functions go straight to the LP; other valuations are integrated
    as ``int f dv_plus - int f dv_minus``.
    """
    f = _nonneg(sys, f)
    if is_belief(v):
        res = belief_integral(sys, v, f, via)
        return IntegralResult(res.value, "lp", res.dual_y, res.primal_x)
    dec = decompose(v)
    plus = belief_integral(sys, dec.v_plus, f, via)
    minus = belief_integral(sys, dec.v_minus, f, via)
    return IntegralResult(plus.value - minus.value, "lp")


def _shifted_value(sys, v, f, lam):
    fbar = tuple(t + lam for t in f)
    ones = (ONE,) * sys.n
    return integral(sys, v, fbar).value - lam * integral(sys, v, ones).value


def integral_shifted(sys: SetSystem, v: Valuation, f) -> IntegralResult:
    """Integral of a weighting of any sign via a shift by ``lam * 1_N``.

    ``lam = max(0, -min f)``.  When ``lam > 0`` the value is recomputed at
    ``lam + 1``; disagreement marks the result as shift-dependent.
    """
    f = weighting(f, sys.n)
    lam = max(ZERO, -min(f))
    if lam == 0:
        res = integral(sys, v, f)
        return IntegralResult(res.value, res.method, res.dual_y, res.primal_x)
    value = _shifted_value(sys, v, f, lam)
    other = _shifted_value(sys, v, f, lam + 1)
    return IntegralResult(value, "lp", shift=lam, shift_dependent=value != other)


def check_strong(sys: SetSystem, v: Valuation, f, lam) -> bool:
    """Whether ``int (f + lam 1_N) dv = int f dv + lam int 1_N dv`` holds exactly."""
    f = _nonneg(sys, f)
    lam = as_fraction(lam)
    if lam < 0:
        raise ChoquetError("shift must be non-negative")
    lhs = integral(sys, v, tuple(t + lam for t in f)).value
    rhs = integral(sys, v, f).value + lam * integral(sys, v, (ONE,) * sys.n).value
    return lhs == rhs


def classical_integral(vhat: Sequence, f) -> Fraction:
    """Level-set Choquet integral of ``f`` w.r.t. a set function on ``2^N``.

    ``vhat`` is indexed by bitmask with ``vhat[0] == 0``.  For ``f >= 0`` this
    is the integral of ``vhat({f >= alpha})`` over ``alpha >= 0``; negative
    entries are handled by the asymmetric extension (shift by ``min f``).
    """
    f = weighting(f)
    n = len(f)
    if len(vhat) != 1 << n:
        raise DimensionMismatch("set function table must have 2^n entries")
    if vhat[0] != 0:
        raise ChoquetError("set function must vanish on the empty set")
    levels = sorted(set(f), reverse=True)
    total = ZERO
    for k, alpha in enumerate(levels):
        nxt = levels[k + 1] if k + 1 < len(levels) else min(ZERO, alpha)
        if alpha == nxt:
            continue
        level_set = 0
        for i, t in enumerate(f):
            if t >= alpha:
                level_set |= 1 << i
        total += (alpha - nxt) * as_fraction(vhat[level_set])
    if levels[-1] < 0:
        total += levels[-1] * as_fraction(vhat[(1 << n) - 1])
    return total


def _require_containment(sys: SetSystem):
    if not sys.is_containment:
        raise NotContainmentOrder("operation requires the containment order")


def mobius_form_integral(sys: SetSystem, beta: Sequence, f) -> Fraction:
    """``sum_F beta_F min_{i in F} f_i`` on a containment-ordered system."""
    _require_containment(sys)
    f = weighting(f, sys.n)
    beta = [as_fraction(b) for b in beta]
    if len(beta) != sys.m:
        raise DimensionMismatch("coefficient vector has wrong length")
    return sum((b * min(f[k] for k in bits(mk)) for b, mk in zip(beta, sys.masks) if b), ZERO)


def extension_hat(sys: SetSystem, v: Valuation) -> list[Fraction]:
    """Extension of ``v`` to ``2^N`` by transporting incidence coordinates.

    ``vhat(S) = sum of beta_F over members F inside S``.  On weakly
    union-closed systems the result is cross-checked against the sum of
    ``v`` over the maximal members inside ``S``.
    """
    _require_containment(sys)
    beta = mobius_inverse(v)
    terms = [(mk, b) for mk, b in zip(sys.masks, beta) if b]
    size = 1 << sys.n
    vhat = [sum((b for mk, b in terms if mk & ~s == 0), ZERO) for s in range(size)]
    if is_weakly_union_closed(sys):
        for s in range(size):
            alt = sum((v[i] for i in maximal_in_mask(sys, s, check_disjoint=True)), ZERO)
            if alt != vhat[s]:
                raise InternalCheckFailed(f"extension formulas disagree at mask {s}")
    return vhat


def is_monotone_set_function(vhat: Sequence) -> tuple[bool, tuple[int, int] | None]:
    """Check ``S <= T => vhat(S) <= vhat(T)`` via single-element steps."""
    size = len(vhat)
    n = size.bit_length() - 1
    for s in range(size):
        for k in range(n):
            t = s | (1 << k)
            if t != s and vhat[s] > vhat[t]:
                return False, (s, t)
    return True, None


def _algebra_probability(sys: SetSystem, p: Valuation):
    rep = classify(sys)
    if not rep.algebra:
        raise NotAnAlgebra(f"family is not an algebra minus the empty set: {rep.witnesses.get('algebra')}")
    if any(x < 0 for x in p.values):
        raise NotAProbability("probability must be non-negative")
    if p[sys.index_of[sys.ground.full]] != 1:
        raise NotAProbability("probability of the ground set must be 1")
    atoms = rep.atoms
    weight = {a: p[sys.index_of[a]] for a in atoms}
    for i, mk in enumerate(sys.masks):
        total = sum((w for a, w in weight.items() if a & ~mk == 0), ZERO)
        if total != p[i]:
            raise NotAProbability(f"not additive on {sys.name(i)}")
    return weight


def lehrer_integral(sys: SetSystem, p: Valuation, f) -> Fraction:
    """Lehrer's integral of ``f >= 0`` w.r.t. a probability on an algebra.

    ``sys`` holds the non-empty members of the algebra.  The value is the
    supremum over non-negative step decompositions below ``f`` (a packing
    LP), cross-checked against the atom formula ``sum_B P(B) min_B f``.
    """
    weight = _algebra_probability(sys, p)
    f = _nonneg(sys, f)
    value = lp_core.solve_packing_max(sys, p, f).value
    atom_form = sum((w * min(f[k] for k in bits(a)) for a, w in weight.items()), ZERO)
    if value != atom_form:  # pragma: no cover
        raise InternalCheckFailed("Lehrer integral disagrees with the atom formula")
    return value


def atom_form_integral(sys: SetSystem, p: Valuation, f) -> Fraction:
    weight = _algebra_probability(sys, p)
    f = _nonneg(sys, f)
    return sum((w * min(f[k] for k in bits(a)) for a, w in weight.items()), ZERO)


def induced_capacity(sys: SetSystem, p: Valuation) -> list[Fraction]:
    """``v_A(S) = max{P(A) : A in algebra, A inside S}`` for every mask ``S``."""
    _algebra_probability(sys, p)
    size = 1 << sys.n
    return [max([ZERO] + [p[i] for i, mk in enumerate(sys.masks) if mk & ~s == 0])
            for s in range(size)]


def comonotonic(f, g) -> bool:
    """No pair of coordinates ordered strictly oppositely by ``f`` and ``g``."""
    f = weighting(f)
    g = weighting(g, len(f))
    n = len(f)
    return not any((f[i] - f[j]) * (g[i] - g[j]) < 0 for i in range(n) for j in range(i + 1, n))


def set_function_from_valuation(sys: SetSystem, v: Valuation) -> list[Fraction]:
    """Table over ``2^N`` for a valuation on all non-empty subsets (``v(empty) = 0``)."""
    size = 1 << sys.n
    if sys.m != size - 1:
        raise ChoquetError("system is not the full power set minus the empty set")
    out = [ZERO] * size
    for i, mk in enumerate(sys.masks):
        out[mk] = v[i]
    return out
