"""Exception types shared across the package."""


class MapstrataError(Exception):
    """Base class for all package-specific errors."""


class FieldMismatchError(MapstrataError, ValueError):
    """Operands live over different coefficient fields."""


class ExactDivisionError(MapstrataError, ArithmeticError):
    """A division that must be exact left a remainder."""


class BoundaryPointError(MapstrataError, ValueError):
    """Operation defined only on interior points got a boundary point."""


class InteriorPointError(MapstrataError, ValueError):
    """Operation defined only on boundary points got an interior point."""


class GuardExceededError(MapstrataError, RuntimeError):
    """A size guard (enumeration, Groebner) was exceeded; override explicitly."""


class InternalInconsistencyError(MapstrataError, RuntimeError):
    """A theorem-backed internal assertion failed; indicates an implementation bug."""


class ParseError(MapstrataError, ValueError):
    """Input document malformed; carries 1-based line and column."""

    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
