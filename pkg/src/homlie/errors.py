"""Exception hierarchy shared by every module."""


class HomLieError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatchError(HomLieError, ValueError):
    pass


class DimensionError(HomLieError, ValueError):
    pass


class UnsupportedFieldError(HomLieError, ValueError):
    pass


class PreconditionError(HomLieError, ValueError):
    pass


class BudgetExceededError(HomLieError, RuntimeError):
    pass


class DocumentError(HomLieError, ValueError):
    """Malformed algebra document. ``path`` names the offending location."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
