class WellCovError(Exception):
    pass


class BudgetExceeded(WellCovError):
    """A configured enumeration or search budget ran out."""


class OracleBudgetExceeded(BudgetExceeded):
    pass


class ContractError(WellCovError, ValueError):
    """An operation was called outside its precondition."""


class GuardExceeded(WellCovError):
    """Input is larger than a brute-force routine is allowed to handle."""


class DecompositionFailed(WellCovError):
    """No decomposition rule applied; the input is outside the declared class."""

    def __init__(self, message: str, residual=None, mapping=None):
        super().__init__(message)
        self.residual = residual
        self.mapping = mapping
