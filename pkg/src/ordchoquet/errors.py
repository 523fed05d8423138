"""Exception hierarchy.  Everything derives from ``ChoquetError`` (a ValueError)."""


class ChoquetError(ValueError):
    pass


class EmptySetInFamily(ChoquetError):
    pass


class DuplicateSet(ChoquetError):
    pass


class CoverViolation(ChoquetError):
    pass


class CycleInOrder(ChoquetError):
    pass


class OrderContradiction(ChoquetError):
    """A generator pair listed for a containment order is not an inclusion."""


class NotContainmentOrder(ChoquetError):
    pass


class NotConsecutive(ChoquetError):
    pass


class NegativeDensity(ChoquetError):
    pass


class NegativeWeighting(ChoquetError):
    pass


class NotAnAlgebra(ChoquetError):
    pass


class NotAProbability(ChoquetError):
    pass


class DimensionMismatch(ChoquetError):
    pass


class InternalCheckFailed(AssertionError):
    """An invariant that holds by theory was violated; always a bug."""
