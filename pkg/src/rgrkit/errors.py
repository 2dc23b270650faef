"""Exception types shared across the package."""


class RulerKitError(Exception):
    """Base class for all rgrkit errors."""


class ModulusNotDivisible(RulerKitError):
    """Resolvability asked for a modulus that the order does not divide."""


class ModulusTooSmall(RulerKitError):
    """Modulus below the doubling threshold needed to embed a ruler."""


class NotPrime(RulerKitError):
    pass


class NotPrimitiveRoot(RulerKitError):
    pass


class NotPrimePower(RulerKitError):
    pass


class OrderTooSmall(RulerKitError):
    pass


class ConstructionFailed(RulerKitError):
    """A closed-form construction produced a set that fails verification."""

    def __init__(self, message, marks=None):
        super().__init__(message)
        self.marks = marks


class UnsupportedGroup(RulerKitError):
    pass


class SizeMismatch(RulerKitError):
    pass


class BudgetExceeded(RulerKitError):
    """Search node budget exhausted before the question was settled.

    ``lower_bound`` is the least length not yet excluded (every smaller
    length was fully exhausted); ``witness`` is the best verified ruler
    found so far, if any.
    """

    def __init__(self, message, lower_bound=None, witness=None, nodes_explored=0):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.witness = witness
        self.nodes_explored = nodes_explored


class TooManyRequested(RulerKitError):
    pass


class KTooLarge(RulerKitError):
    pass


class NotRmgr(RulerKitError):
    pass


class NotGgr(RulerKitError):
    pass


class PairCovered(RulerKitError):
    """A point pair would be covered twice by a base-block development."""


class WrongParameters(RulerKitError):
    pass


class Nonextendable(RulerKitError):
    """Affine completion failed; the input was not a valid resolvable
    square-order configuration (valid inputs always extend)."""


class MatchingIncomplete(RulerKitError):
    """No perfect host assignment exists; the input violates the
    configuration axioms somewhere upstream."""


class OutOfRange(RulerKitError):
    pass
