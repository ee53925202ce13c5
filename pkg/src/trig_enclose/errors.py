"""Exception types shared by every module."""


class TrigEncloseError(Exception):
    """Base class for library errors."""


class RejectedInput(TrigEncloseError, ValueError):
    """Argument outside an operation's accepted set (unknown id, bad order, ...)."""


class DomainError(TrigEncloseError, ValueError):
    """Evaluation point outside the guarded domain of a function."""


class BudgetExceeded(TrigEncloseError):
    """A tail could not be certified within the term budget.

    ``best_bound`` carries the tightest tail bound reached before giving up.
    """

    def __init__(self, message, best_bound=None, terms=None):
        super().__init__(message)
        self.best_bound = best_bound
        self.terms = terms
