"""Exception types shared across the package."""


class SuperhomError(Exception):
    """Base class for all errors raised by superhom."""


class DimensionMismatchError(SuperhomError, ValueError):
    pass


class ConstraintViolationError(SuperhomError, ValueError):
    """A value failed a mathematical constraint (e.g. a nonvanishing minor)."""


class UnsupportedKError(SuperhomError, ValueError):
    pass


class InconsistencyError(SuperhomError, RuntimeError):
    """Sampled computations that should agree did not."""


class SpecError(SuperhomError, ValueError):
    """Malformed JSON input. ``where`` locates the problem (line/column or a JSON path)."""

    def __init__(self, message, where=None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)
