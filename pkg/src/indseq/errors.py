"""Exception types shared across the package."""


class IndSeqError(Exception):
    """Base class for errors raised by indseq."""


class BudgetExceeded(IndSeqError):
    """A search or counting routine hit its configured work limit.

    Distinct from a negative answer: the computation was abandoned.
    """


class GraphError(IndSeqError, ValueError):
    """Invalid graph construction or encoding."""
