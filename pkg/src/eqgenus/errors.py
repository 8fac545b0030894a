class EqGenusError(Exception):
    """Base class for errors raised by the engine."""


class ScenarioError(EqGenusError, ValueError):
    """Malformed input description (CLI exit code 2)."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class PreconditionError(EqGenusError, ValueError):
    """Well-formed input that violates an operation's precondition (exit code 3)."""


class InconsistentDataError(EqGenusError, ArithmeticError):
    """Fixed-point data that cannot come from an actual circle action."""
