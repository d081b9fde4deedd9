"""Exception hierarchy shared by every module."""


class BNError(Exception):
    """Base class for all errors raised by this package."""


class NetworkError(BNError, ValueError):
    """Malformed network or out-of-range component/state."""


class ParseError(NetworkError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class CapExceeded(BNError):
    """A size limit on exhaustive enumeration was hit."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class EliminationForbidden(BNError):
    """The component has a positive autoregulation and cannot be eliminated."""

    def __init__(self, component, reason="positive loop"):
        self.component = component
        super().__init__(f"cannot eliminate {component!r}: {reason}")
