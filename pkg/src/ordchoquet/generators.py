"""Seeded random instances for the verification suites.

Class membership is guaranteed by construction (closures) except for
general posets and intersection systems, which are filtered through
:func:`classify`.  All randomness goes through a ``random.Random``.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .set_system import SetSystem, build, classify
from .valuation import ZERO, Valuation, cumulative

KINDS = ("wuc", "union_closed", "algebra", "containment", "poset", "intersection", "boolean")


def _random_masks(rng: random.Random, n: int, k: int, p: float | None = None) -> set[int]:
    """``k`` draws of non-empty subsets; uniform, or elementwise with probability ``p``."""
    full = (1 << n) - 1
    out = set()
    for _ in range(k):
        if p is None:
            mk = rng.randint(1, full)
        else:
            mk = 0
            while not mk:
                mk = sum(1 << j for j in range(n) if rng.random() < p)
        out.add(mk)
    return out


def _covered_family(rng: random.Random, n: int, k: int, m_max: int) -> set[int]:
    """About ``k`` random non-empty sets, topped up with singletons to cover N."""
    k = max(1, min(k, m_max))
    while True:
        fam = _cover(rng, n, _random_masks(rng, n, k))
        if len(fam) <= m_max:
            return fam
        k = max(1, k - 1)


def _cover(rng: random.Random, n: int, masks: set[int]) -> set[int]:
    cov = 0
    for mk in masks:
        cov |= mk
    for k in range(n):
        if not cov >> k & 1:
            masks.add(1 << k)
    return masks


def union_closure(masks: set[int], intersecting_only: bool) -> set[int]:
    out = set(masks)
    frontier = list(out)
    while frontier:
        new = []
        cur = list(out)
        for a in frontier:
            for b in cur:
                if intersecting_only and not a & b:
                    continue
                u = a | b
                if u not in out:
                    out.add(u)
                    new.append(u)
            cur.extend(new)
        frontier = new
    return out


def _ground(n: int) -> list[int]:
    return list(range(1, n + 1))


def _from_masks(n: int, masks, order="containment") -> SetSystem:
    ground = _ground(n)
    family = [[ground[k] for k in range(n) if mk >> k & 1] for mk in sorted(masks)]
    return build(ground, family, order)


def weakly_union_closed(rng: random.Random, n: int, m_max: int) -> SetSystem:
    while True:
        seeds = _cover(rng, n, _random_masks(rng, n, rng.randint(n, 3 * n), p=rng.uniform(0.2, 0.45)))
        fam = union_closure(seeds, intersecting_only=True)
        if len(fam) <= m_max:
            return _from_masks(n, fam)


def union_closed(rng: random.Random, n: int, m_max: int) -> SetSystem:
    while True:
        seeds = _cover(rng, n, _random_masks(rng, n, rng.randint(1, n), p=rng.uniform(0.15, 0.5)))
        fam = union_closure(seeds, intersecting_only=False)
        if len(fam) <= m_max:
            return _from_masks(n, fam)


def algebra(rng: random.Random, n: int, m_max: int) -> SetSystem:
    """Algebra generated by a random partition of the ground set into atoms."""
    max_atoms = min(n, (m_max + 1).bit_length() - 1)
    k = rng.randint(1, max_atoms)
    order = list(range(n))
    rng.shuffle(order)
    cuts = sorted(rng.sample(range(1, n), k - 1)) if k > 1 else []
    atoms = []
    for lo, hi in zip([0] + cuts, cuts + [n]):
        mk = 0
        for pos in order[lo:hi]:
            mk |= 1 << pos
        atoms.append(mk)
    fam = set()
    for sel in range(1, 1 << len(atoms)):
        mk = 0
        for t, a in enumerate(atoms):
            if sel >> t & 1:
                mk |= a
        fam.add(mk)
    return _from_masks(n, fam)


def containment(rng: random.Random, n: int, m_max: int) -> SetSystem:
    fam = _covered_family(rng, n, rng.randint(1, m_max), m_max)
    return _from_masks(n, fam)


def boolean(n: int) -> SetSystem:
    return _from_masks(n, range(1, 1 << n))


def poset(rng: random.Random, n: int, m_max: int, density: float | None = None) -> SetSystem:
    """Random sets with random generator pairs consistent with a hidden linear order."""
    fam = sorted(_covered_family(rng, n, rng.randint(1, m_max), m_max))
    rng.shuffle(fam)
    p = rng.random() * 0.5 if density is None else density
    pairs = [(i, j) for i in range(len(fam)) for j in range(i + 1, len(fam)) if rng.random() < p]
    return _from_masks_explicit(n, fam, pairs)


def _from_masks_explicit(n, fam, pairs) -> SetSystem:
    ground = _ground(n)
    family = [[ground[k] for k in range(n) if mk >> k & 1] for mk in fam]
    return build(ground, family, pairs)


def _chain(rng: random.Random, n: int, m_max: int) -> SetSystem:
    """Consecutive chain: each element occupies a contiguous run of chain positions."""
    length = rng.randint(1, min(m_max, 3 * n))
    runs = []
    for _ in range(n):
        lo = rng.randrange(length)
        runs.append((lo, rng.randint(lo, length - 1)))
    fam = []
    for t in range(length):
        mk = sum(1 << j for j, (lo, hi) in enumerate(runs) if lo <= t <= hi)
        if mk and mk not in fam:
            fam.append(mk)
    pairs = [(i + 1, i) for i in range(len(fam) - 1)]
    return _from_masks_explicit(n, fam, pairs)


def _disjoint_sum(rng: random.Random, n: int, m_max: int) -> SetSystem:
    """Intersection systems on the blocks of a random split, placed side by side."""
    cut = rng.randint(1, n - 1)
    left = intersection_system(rng, cut, max(1, m_max // 2), allow_sum=False)
    right = intersection_system(rng, n - cut, max(1, m_max // 2), allow_sum=False)
    fam = [mk for mk in left.masks] + [mk << cut for mk in right.masks]
    pairs = [(i, j) for i in range(left.m) for j in range(left.m) if i != j and left.leq[i, j]]
    off = left.m
    pairs += [(off + i, off + j) for i in range(right.m) for j in range(right.m)
              if i != j and right.leq[i, j]]
    return _from_masks_explicit(n, fam, pairs)


def intersection_system(rng: random.Random, n: int, m_max: int, allow_sum: bool = True,
                        max_tries: int = 10_000) -> SetSystem:
    """Rejection sampler mixing random posets, chains, weakly union-closed
    families and disjoint sums; every result passes :func:`classify`."""
    for _ in range(max_tries):
        r = rng.random()
        if r < 0.35:
            cand = poset(rng, n, min(m_max, 8))
        elif r < 0.6:
            cand = _chain(rng, n, m_max)
        elif r < 0.75 and allow_sum and n >= 2:
            cand = _disjoint_sum(rng, n, m_max)
        else:
            cand = weakly_union_closed(rng, n, m_max)
        if cand.m <= m_max and classify(cand).intersection_system:
            return cand
    raise RuntimeError("no intersection system found")  # pragma: no cover


def random_system(rng: random.Random, kind: str, n_max: int = 6, m_max: int = 40,
                  n_min: int = 1) -> SetSystem:
    n = rng.randint(n_min, n_max)
    if kind == "wuc":
        return weakly_union_closed(rng, n, m_max)
    if kind == "union_closed":
        return union_closed(rng, n, m_max)
    if kind == "algebra":
        return algebra(rng, n, m_max)
    if kind == "containment":
        return containment(rng, n, m_max)
    if kind == "poset":
        return poset(rng, n, m_max)
    if kind == "intersection":
        return intersection_system(rng, n, m_max)
    if kind == "boolean":
        return boolean(min(n, (m_max + 1).bit_length() - 1))
    raise ValueError(f"unknown system kind {kind!r}")


def random_rational(rng: random.Random, lo: int, hi: int, denom: int = 1) -> Fraction:
    return Fraction(rng.randint(lo * denom, hi * denom), denom)


def random_weighting(rng: random.Random, n: int, hi: int = 9, lo: int = 0) -> tuple[Fraction, ...]:
    denom = rng.choice((1, 1, 2, 3))
    return tuple(random_rational(rng, lo, hi, denom) for _ in range(n))


def random_valuation(rng: random.Random, sys: SetSystem, lo: int = -5, hi: int = 5) -> Valuation:
    denom = rng.choice((1, 1, 2))
    return Valuation(sys, (random_rational(rng, lo, hi, denom) for _ in range(sys.m)))


def random_density(rng: random.Random, sys: SetSystem, hi: int = 4, sparsity: float = 0.5) -> Valuation:
    return Valuation(sys, (rng.randint(0, hi) if rng.random() < sparsity else 0 for _ in range(sys.m)))


def random_belief(rng: random.Random, sys: SetSystem) -> Valuation:
    return cumulative(random_density(rng, sys, sparsity=rng.choice((0.2, 0.5, 1.0))))


def random_capacity(rng: random.Random, sys: SetSystem, hi: int = 3) -> Valuation:
    """Non-negative and isotone: built bottom-up along the linear extension."""
    vals = [ZERO] * sys.m
    for i in range(sys.m - 1, -1, -1):
        base = max((vals[k] for k in sys.below[i] if k != i), default=ZERO)
        vals[i] = base + rng.randint(0, hi)
    return Valuation(sys, vals)


def all_union_closed(n: int, m_max: int | None = None) -> list[frozenset[int]]:
    """Every union-closed family of non-empty subsets covering ``{0..n-1}``.

    Families come out as frozensets of masks in a fixed order (by sorted
    mask tuple), so enumeration is reproducible.
    """
    full = (1 << n) - 1
    out: list[frozenset[int]] = []

    def extend(chosen: list[int], start: int):
        # chosen is union-closed; try adding larger masks in increasing order
        fam = frozenset(chosen)
        if full in fam and (m_max is None or len(fam) <= m_max):
            out.append(fam)
        for mk in range(start, full):
            if mk in fam:
                continue
            new = union_closure(set(chosen) | {mk}, intersecting_only=False)
            if min(new - fam) != mk:
                continue  # reachable from a smaller new generator
            if m_max is not None and len(new) > m_max:
                continue
            extend(sorted(new), mk + 1)

    extend([full], 1)
    uniq = sorted(set(out), key=lambda fam: sorted(fam))
    return uniq
