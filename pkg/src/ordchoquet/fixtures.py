"""Small hand-made systems used by the suites, the CLI tests and the docs."""

from __future__ import annotations

from fractions import Fraction

from .set_system import SetSystem, build
from .valuation import Valuation

# Eight sets on {1..6} with a non-inclusion order; each pair (a, b) reads a < b.
_ORDERED_EIGHT = ["12", "126", "234", "15", "236", "16", "45", "6"]
_ORDERED_EIGHT_COVERS = [
    ("6", "45"), ("6", "16"), ("6", "236"),
    ("45", "234"), ("45", "15"),
    ("16", "15"), ("16", "126"),
    ("236", "234"), ("236", "126"),
    ("15", "12"), ("234", "12"), ("126", "12"),
]


def ordered_eight() -> SetSystem:
    """Intersection system on N = {1..6} whose order is not inclusion."""
    pos = {name: k for k, name in enumerate(_ORDERED_EIGHT)}
    family = [[int(c) for c in name] for name in _ORDERED_EIGHT]
    pairs = [(pos[a], pos[b]) for a, b in _ORDERED_EIGHT_COVERS]
    return build(range(1, 7), family, pairs)


_NONMONOTONE = ["12345", "1234", "2345", "1345", "124", "234", "345", "12", "35", "2", "5"]


def nonmonotone_extension(isotone: bool = False) -> tuple[SetSystem, Valuation]:
    """Weakly union-closed family whose extension is not monotone.

    By default ``v`` is 1 on ``N``, ``12`` and ``35`` and 0 elsewhere.  With
    ``isotone=True`` it is 1 on every member containing ``12`` or ``35``,
    which makes it a capacity.  Either way the extension is 2 on
    ``{1,2,3,5}`` but only 1 on ``N``.
    """
    sys = build(range(1, 6), [[int(c) for c in s] for s in _NONMONOTONE], "containment")
    if isotone:
        a, b = sys.ground.mask([1, 2]), sys.ground.mask([3, 5])
        vals = (int(mk & a == a or mk & b == b) for mk in sys.masks)
    else:
        ones = {sys.index([int(c) for c in s]) for s in ("12345", "12", "35")}
        vals = (int(i in ones) for i in range(sys.m))
    return sys, Valuation(sys, vals)


def two_atom_algebra() -> tuple[SetSystem, Valuation]:
    """Algebra on {1,2,3} with atoms {1}, {2,3} and P({1}) = 1/3."""
    sys = build([1, 2, 3], [[1, 2, 3], [1], [2, 3]], "containment")
    p = {sys.index([1, 2, 3]): Fraction(1), sys.index([1]): Fraction(1, 3),
         sys.index([2, 3]): Fraction(2, 3)}
    return sys, Valuation(sys, (p[i] for i in range(sys.m)))


def boolean_pair() -> SetSystem:
    """All non-empty subsets of {1, 2} under inclusion."""
    return build([1, 2], [[1, 2], [1], [2]], "containment")
