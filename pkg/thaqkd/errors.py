"""Exception types shared across thaqkd."""


class ConfigError(ValueError):
    """Invalid run configuration (unknown key, bad value, out of range).

    Attributes:
        key: Offending configuration key, if known
        line: 1-based line number in a key=value file, if known
    """

    def __init__(self, message: str, key: str | None = None, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.key = key
        self.line = line


class NumericalError(ArithmeticError):
    """A computation could not produce a trustworthy number.

    Attributes:
        operation: Name of the failing operation (e.g. "fidelity")
    """

    def __init__(self, operation: str, message: str):
        super().__init__(f"{operation}: {message}")
        self.operation = operation
