"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the region where the operation is defined."""


class RangeOverflowError(DomainError):
    """t*log(n) exceeds the supported reduction range (|x| <= 1e12)."""


class ConvergenceError(ArithmeticError):
    """An iterative solver did not converge within its iteration budget."""


class ZerosParseError(ValueError):
    """A zeros file is malformed; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
