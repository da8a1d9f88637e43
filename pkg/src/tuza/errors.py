"""Exception types raised by the toolkit."""


class TuzaError(Exception):
    """Base class for every error raised by this package."""


class GraphFormatError(TuzaError, ValueError):
    """A graph or partition violates a structural invariant."""


class NotBipartite(TuzaError, ValueError):
    pass


class NotSplit(TuzaError, ValueError):
    pass


class PreconditionViolated(TuzaError, ValueError):
    pass


class BudgetExceeded(TuzaError, RuntimeError):
    """A search ran out of its node budget before finishing."""


class Infeasible(TuzaError, ValueError):
    pass


class InvalidK(TuzaError, ValueError):
    pass


class MissingCrossEdge(TuzaError, ValueError):
    pass


class DomainError(TuzaError, ValueError):
    pass


class DensityTooLow(TuzaError, ValueError):
    pass


class CaseMismatch(TuzaError, ValueError):
    """A case-specific construction was called outside its case."""


class SpecTooSmall(TuzaError, ValueError):
    pass


class BoundNotMet(TuzaError, RuntimeError):
    pass


class TooLarge(TuzaError, ValueError):
    pass


class NoInstance(TuzaError, RuntimeError):
    pass
