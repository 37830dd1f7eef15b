class MEPError(Exception):
    pass


class InvalidRange(MEPError, ValueError):
    pass


class InstanceFormatError(MEPError, ValueError):
    pass


class InvalidK(MEPError, ValueError):
    pass


class ClusterTooLarge(MEPError, ValueError):
    """A cell cluster exceeds the budget; the space was not preprocessed."""


class InfeasibleGuess(MEPError):
    pass


class LimitExceeded(MEPError):
    """A solver refused an instance because a configured bound was exceeded."""


class BudgetExceeded(LimitExceeded):
    pass


class DLimitExceeded(LimitExceeded):
    pass
