"""Exception hierarchy shared by every module of the package."""


class GameError(ValueError):
    """Base class for all errors raised by symgames."""


class NotSkewSymmetric(GameError):
    pass


class EmptyMatrix(GameError):
    pass


class LengthMismatch(GameError):
    pass


class DimensionMismatch(GameError):
    pass


class EmptySubset(GameError):
    pass


class OutOfRange(GameError):
    pass


class OddDimension(GameError):
    pass


class EvenDimension(GameError):
    pass


class NotOptimal(GameError):
    pass


class TooLarge(GameError):
    pass


class Infeasible(GameError):
    """The linear program has no feasible point."""


class Unbounded(GameError):
    """The linear program objective is unbounded on the feasible region."""


class TooFewTrials(GameError):
    pass


class ConditioningEmpty(GameError):
    """No trial satisfied the conditioning event of a conditional experiment."""
