"""Finite ordered set systems (F, <=) over a ground set N.

Members of the family are stored as integer bitmasks over the ground
positions.  After :func:`build` the family is re-indexed into a linear
extension in which larger members come first (``F_i >= F_j`` implies
``i <= j``), so the incidence matrix ``Z[i, j] = [F_i <= F_j]`` is lower
unitriangular and the Moebius matrix is its exact integer inverse.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

import numpy as np

from . import kernels
from .errors import (
    ChoquetError,
    CoverViolation,
    CycleInOrder,
    DuplicateSet,
    EmptySetInFamily,
    InternalCheckFailed,
    OrderContradiction,
)

MAX_GROUND = 62


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> tuple[int, ...]:
    """Positions of the set bits of ``mask`` in increasing order."""
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


class GroundSet:
    """Ordered list of distinct element labels.

    The position of a label is its bit in every mask and fixes the total
    order used for tie-breaking.
    """

    __slots__ = ("elements", "_pos")

    def __init__(self, elements: Iterable[Hashable]):
        elements = tuple(elements)
        if not elements:
            raise ChoquetError("ground set must be non-empty")
        if len(set(elements)) != len(elements):
            raise ChoquetError("ground set labels must be distinct")
        if len(elements) > MAX_GROUND:
            raise ChoquetError(f"ground sets larger than {MAX_GROUND} are not supported")
        self.elements = elements
        self._pos = {e: k for k, e in enumerate(elements)}

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def position(self, label: Hashable) -> int:
        try:
            return self._pos[label]
        except KeyError:
            raise ChoquetError(f"unknown ground element {label!r}") from None

    def mask(self, labels: Iterable[Hashable]) -> int:
        out = 0
        for e in labels:
            out |= 1 << self.position(e)
        return out

    def labels(self, mask: int) -> tuple:
        return tuple(self.elements[k] for k in bits(mask))

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        return isinstance(other, GroundSet) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"GroundSet({list(self.elements)!r})"


@dataclass(frozen=True)
class OrderSpec:
    """How to order the family.

    ``kind`` is ``"trivial"``, ``"containment"`` or ``"explicit"``.  For the
    explicit kind, ``pairs`` are generators ``(i, j)`` meaning ``F_i <= F_j``
    in input indexing; they are closed reflexively and transitively.  Pairs
    given with the containment kind are only validated against inclusion.
    """

    kind: str = "trivial"
    pairs: tuple[tuple[int, int], ...] = ()

    @classmethod
    def coerce(cls, spec) -> "OrderSpec":
        if isinstance(spec, OrderSpec):
            return spec
        if isinstance(spec, str):
            if spec not in ("trivial", "containment"):
                raise ChoquetError(f"unknown order {spec!r}")
            return cls(spec)
        if isinstance(spec, dict):
            pairs = tuple(tuple(p) for p in spec.get("pairs", ()))
            kind = spec.get("kind", "explicit")
            return cls(kind, pairs)
        return cls("explicit", tuple(tuple(p) for p in spec))


class SetSystem:
    """Immutable ordered set system; construct with :func:`build`."""

    def __init__(self, ground, masks, leq, zeta, mobius, input_index, order_kind):
        self.ground = ground
        self.masks = tuple(masks)
        self.leq = leq
        self.zeta = zeta
        self.mobius = mobius
        self.input_index = tuple(input_index)
        self.order_kind = order_kind
        for arr in (leq, zeta, mobius):
            arr.setflags(write=False)

    @property
    def m(self) -> int:
        return len(self.masks)

    @property
    def n(self) -> int:
        return self.ground.n

    @cached_property
    def mask_array(self) -> np.ndarray:
        a = np.array(self.masks, dtype=np.int64)
        a.setflags(write=False)
        return a

    @cached_property
    def index_of(self) -> dict[int, int]:
        return {mk: i for i, mk in enumerate(self.masks)}

    @cached_property
    def is_containment(self) -> bool:
        return bool(np.array_equal(self.leq, kernels.containment_matrix(self.mask_array)))

    @cached_property
    def below(self) -> tuple[tuple[int, ...], ...]:
        """``below[j]`` lists the indices i with ``F_i <= F_j``."""
        return tuple(tuple(np.flatnonzero(self.leq[:, j]).tolist()) for j in range(self.m))

    @cached_property
    def above(self) -> tuple[tuple[int, ...], ...]:
        """``above[i]`` lists the indices j with ``F_i <= F_j`` (the upper interval)."""
        return tuple(tuple(np.flatnonzero(self.leq[i]).tolist()) for i in range(self.m))

    @cached_property
    def mobius_columns(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Sparse columns of the Moebius matrix as ``(row, entry)`` pairs."""
        cols = []
        for j in range(self.m):
            nz = np.flatnonzero(self.mobius[:, j])
            cols.append(tuple((int(i), int(self.mobius[i, j])) for i in nz))
        return tuple(cols)

    def set_labels(self, i: int) -> tuple:
        return self.ground.labels(self.masks[i])

    def name(self, i: int) -> str:
        """Compact label string such as ``'126'`` (labels joined, or comma separated)."""
        labels = [str(e) for e in self.set_labels(i)]
        if all(len(s) == 1 for s in labels):
            return "".join(labels)
        return "{" + ",".join(labels) + "}"

    def index(self, labels: Iterable[Hashable]) -> int:
        mk = self.ground.mask(labels)
        try:
            return self.index_of[mk]
        except KeyError:
            raise ChoquetError(f"{sorted(map(str, labels))} is not a member of the family") from None

    def to_dict(self, indexing: str = "input") -> dict:
        """JSON-ready description.

        ``indexing="input"`` lists the family as it was given to :func:`build`
        (matching :func:`valuation_to_json` keys); ``"internal"`` uses the
        linear-extension indexing.
        """
        if indexing == "input":
            pos = [0] * self.m
            for i, k in enumerate(self.input_index):
                pos[k] = i
        elif indexing == "internal":
            pos = list(range(self.m))
        else:
            raise ChoquetError(f"unknown indexing {indexing!r}")
        where = {i: t for t, i in enumerate(pos)}
        return {
            "ground": list(self.ground.elements),
            "family": [list(self.set_labels(i)) for i in pos],
            "order": self._order_json(where),
        }

    def _order_json(self, where):
        if self.order_kind in ("trivial", "containment"):
            return self.order_kind
        pairs = sorted([where[i], where[j]] for i in range(self.m) for j in range(self.m)
                       if i != j and self.leq[i, j])
        return {"pairs": pairs}

    def __repr__(self):
        names = ", ".join(self.name(i) for i in range(self.m))
        return f"SetSystem(n={self.n}, m={self.m}, order={self.order_kind}, family=[{names}])"


def _linear_extension(masks: Sequence[int], leq: np.ndarray) -> list[int]:
    """Kahn's algorithm from the top: emit a maximal remaining member each step.

    Ties among currently maximal members go to larger cardinality, then to
    the lexicographically smallest list of ground positions.
    """
    m = len(masks)
    strict = leq & ~np.eye(m, dtype=bool)
    n_above = strict.sum(axis=1).astype(int).tolist()
    heap = [(-popcount(masks[i]), bits(masks[i]), i) for i in range(m) if n_above[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, _, i = heapq.heappop(heap)
        order.append(i)
        for k in np.flatnonzero(strict[:, i]).tolist():
            n_above[k] -= 1
            if n_above[k] == 0:
                heapq.heappush(heap, (-popcount(masks[k]), bits(masks[k]), k))
    if len(order) != m:  # pragma: no cover - closure already antisymmetric
        raise CycleInOrder("order is not acyclic")
    return order


def build(ground, family: Sequence[Iterable[Hashable]], order="trivial") -> SetSystem:
    """Build and validate an ordered set system.

    ``ground`` is a :class:`GroundSet` or an iterable of labels, ``family`` a
    sequence of label collections and ``order`` anything accepted by
    :meth:`OrderSpec.coerce`.
    """
    if not isinstance(ground, GroundSet):
        ground = GroundSet(ground)
    spec = OrderSpec.coerce(order)
    family = list(family)
    if not family:
        raise ChoquetError("family must be non-empty")

    masks = []
    seen = {}
    for k, members in enumerate(family):
        mk = ground.mask(members)
        if mk == 0:
            raise EmptySetInFamily(f"family member {k} is empty")
        if mk in seen:
            raise DuplicateSet(f"family members {seen[mk]} and {k} are the same set")
        seen[mk] = k
        masks.append(mk)
    cover = 0
    for mk in masks:
        cover |= mk
    if cover != ground.full:
        raise CoverViolation(f"elements {list(ground.labels(ground.full & ~cover))} are not covered")

    m = len(masks)
    arr = np.array(masks, dtype=np.int64)
    if spec.kind == "trivial":
        rel = np.zeros((m, m), dtype=bool)
    elif spec.kind == "containment":
        rel = kernels.containment_matrix(arr)
    elif spec.kind == "explicit":
        rel = np.zeros((m, m), dtype=bool)
    else:
        raise ChoquetError(f"unknown order kind {spec.kind!r}")
    for pair in spec.pairs:
        i, j = (int(t) for t in pair)
        if not (0 <= i < m and 0 <= j < m):
            raise ChoquetError(f"order pair {pair} out of range")
        if spec.kind == "containment":
            if masks[i] & ~masks[j]:
                raise OrderContradiction(f"pair {pair} contradicts inclusion")
        else:
            rel[i, j] = True

    leq = np.asarray(kernels.closure(rel), dtype=bool)
    cyc = np.argwhere(leq & leq.T & ~np.eye(m, dtype=bool))
    if len(cyc):
        i, j = cyc[0].tolist()
        raise CycleInOrder(f"members {i} and {j} precede each other")

    perm = _linear_extension(masks, leq)
    masks = [masks[i] for i in perm]
    leq = leq[np.ix_(perm, perm)].copy()
    if np.triu(leq, k=1).any():  # pragma: no cover
        raise InternalCheckFailed("linear extension violates the index rule")
    zeta = leq.astype(np.int64)
    mobius = np.asarray(kernels.unit_lower_inverse(zeta), dtype=np.int64)
    prod = zeta.astype(object) @ mobius.astype(object)
    if not (prod == np.eye(m, dtype=np.int64)).all():
        raise InternalCheckFailed("Z * Z^-1 != I (integer overflow?)")
    return SetSystem(ground, masks, leq, zeta, mobius, perm, spec.kind)


def mobius_matrix(sys: SetSystem) -> np.ndarray:
    """The exact integer inverse of the incidence matrix."""
    return sys.mobius.copy()


def restrict(sys: SetSystem, x: Iterable[Hashable]) -> list[int]:
    """Indices of the members contained in ``x``, in index order."""
    return restrict_mask(sys, sys.ground.mask(x))


def restrict_mask(sys: SetSystem, x: int) -> list[int]:
    return np.flatnonzero(kernels.subset_of(sys.mask_array, x)).tolist()


def maximal_in(sys: SetSystem, x: Iterable[Hashable], check_disjoint: bool | None = None) -> list[int]:
    """Inclusion-maximal members of F(x).

    On weakly union-closed systems these are pairwise disjoint; that is
    checked when ``check_disjoint`` is true (default: when the family is
    weakly union-closed).
    """
    return maximal_in_mask(sys, sys.ground.mask(x), check_disjoint)


def maximal_in_mask(sys: SetSystem, x: int, check_disjoint: bool | None = None) -> list[int]:
    idx = np.flatnonzero(kernels.maximal_in(sys.mask_array, x)).tolist()
    if check_disjoint is None:
        check_disjoint = is_weakly_union_closed(sys)
    if check_disjoint:
        acc = 0
        for i in idx:
            if acc & sys.masks[i]:
                raise InternalCheckFailed("maximal members of a weakly union-closed family overlap")
            acc |= sys.masks[i]
    return idx


def is_weakly_union_closed(sys: SetSystem) -> bool:
    return kernels.union_witness(sys.mask_array, True)[0] < 0


@dataclass(frozen=True)
class StructureReport:
    trivially_ordered: bool
    containment_ordered: bool
    weakly_union_closed: bool
    union_closed: bool
    algebra: bool
    consecutive: bool
    intersection_system: bool
    atoms: tuple[int, ...] = ()
    witnesses: dict = field(default_factory=dict)

    FLAGS = (
        "trivially_ordered",
        "containment_ordered",
        "weakly_union_closed",
        "union_closed",
        "algebra",
        "consecutive",
        "intersection_system",
    )

    def to_dict(self, sys: SetSystem | None = None) -> dict:
        out = {name: getattr(self, name) for name in self.FLAGS}
        if sys is None:
            out["atoms"] = list(self.atoms)
            out["witnesses"] = {k: list(v) for k, v in self.witnesses.items()}
        else:
            out["atoms"] = [list(sys.ground.labels(a)) for a in self.atoms]
            out["witnesses"] = {k: _render_witness(sys, v) for k, v in self.witnesses.items()}
        return out


def _render_witness(sys, w):
    out = []
    for t in w:
        if isinstance(t, (int, np.integer)):
            out.append(sys.name(int(t)))
        else:
            out.append(t)
    return out


def _algebra_check(sys: SetSystem):
    full = sys.ground.full
    family = set(sys.masks) | {0}
    if full not in family:
        return False, ("missing_ground",)
    for i, mk in enumerate(sys.masks):
        if full & ~mk not in family:
            return False, ("complement", i)
    w = kernels.union_witness(sys.mask_array, False)
    if w[0] >= 0:
        return False, ("union", int(w[0]), int(w[1]))
    return True, ()


def classify(sys: SetSystem) -> StructureReport:
    """Exhaustively evaluate the structural predicates of ``sys``."""
    masks = sys.mask_array
    leq = np.ascontiguousarray(sys.leq)
    m = sys.m
    wit: dict[str, tuple] = {}

    strict = np.argwhere(leq & ~np.eye(m, dtype=bool))
    trivial = len(strict) == 0
    if not trivial:
        wit["trivially_ordered"] = tuple(int(t) for t in strict[0])

    sub = kernels.containment_matrix(masks)
    diff = np.argwhere(sub != leq)
    containment = len(diff) == 0
    if not containment:
        wit["containment_ordered"] = tuple(int(t) for t in diff[0])

    w = kernels.union_witness(masks, True)
    wuc = w[0] < 0
    if not wuc:
        wit["weakly_union_closed"] = (int(w[0]), int(w[1]))

    w = kernels.union_witness(masks, False)
    uc = w[0] < 0
    if not uc:
        wit["union_closed"] = (int(w[0]), int(w[1]))

    alg, awit = _algebra_check(sys)
    atoms: tuple[int, ...] = ()
    if alg:
        atoms = tuple(sys.masks[i] for i in range(m)
                      if not any(j != i and sub[j, i] for j in range(m)))
    else:
        wit["algebra"] = awit

    w = kernels.consecutive_witness(masks, leq)
    consecutive = w[0] < 0
    if not consecutive:
        wit["consecutive"] = tuple(int(t) for t in w)

    inter = consecutive
    if not consecutive:
        wit["intersection_system"] = ("consecutive",) + wit["consecutive"]
    else:
        w = kernels.is0_witness(masks, leq)
        if w[0] >= 0:
            inter = False
            wit["intersection_system"] = ("IS0", int(w[0]), int(w[1]))
        else:
            w = kernels.is1_witness(masks, leq)
            if w[0] >= 0:
                inter = False
                kind = "meet" if w[3] == 0 else "join"
                wit["intersection_system"] = ("IS1", int(w[0]), int(w[1]), int(w[2]), kind)

    return StructureReport(
        trivially_ordered=trivial,
        containment_ordered=containment,
        weakly_union_closed=bool(wuc),
        union_closed=bool(uc),
        algebra=alg,
        consecutive=bool(consecutive),
        intersection_system=bool(inter),
        atoms=atoms,
        witnesses=wit,
    )


def relabel(sys: SetSystem, perm: Sequence[int]) -> SetSystem:
    """Same system with ground element at position k renamed to position perm[k].

    The explicit order is carried over through the input indexing, so the
    result is isomorphic to ``sys``.
    """
    ground = GroundSet(sys.ground.elements[p] for p in _inverse(perm))
    family = [sys.set_labels(i) for i in range(sys.m)]
    if sys.order_kind == "containment":
        order = "containment"
    else:
        order = [(i, j) for i in range(sys.m) for j in range(sys.m) if i != j and sys.leq[i, j]]
    return build(ground, family, order)


def _inverse(perm):
    inv = [0] * len(perm)
    for k, p in enumerate(perm):
        inv[p] = k
    return inv
