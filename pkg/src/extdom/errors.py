"""Exception types shared across the package."""


class InvalidVertexError(ValueError):
    """A vertex id is outside the graph's 0..n-1 range."""


class InfeasibleCardinalityError(ValueError):
    """Requested solution size exceeds what the instance allows."""


class StructureError(RuntimeError):
    """A decomposition component does not match any expected tree shape."""


class OracleBudgetError(RuntimeError):
    """An exhaustive enumeration would exceed the configured subset budget."""


class WrongSettingError(ValueError):
    """An algorithm was invoked on an election setting it does not support."""


class SettingViolationError(ValueError):
    """An election instance violates the assumptions of its declared setting."""


class InvalidAllocationError(ValueError):
    """An object allocation is not a bijection between vertices and objects."""


class InstanceError(ValueError):
    """An instance is malformed, e.g. object/vertex count mismatch."""


class ParseError(ValueError):
    """An instance file could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
