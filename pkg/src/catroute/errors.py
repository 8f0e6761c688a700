"""Exception types shared across the package."""


class CatrouteError(Exception):
    """Base class for all catroute errors."""


class GraphFormatError(CatrouteError):
    """Malformed graph input (text format or edge list)."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        prefix = ""
        if path is not None:
            prefix = f"{path}:"
            if line is not None:
                prefix += f"{line}:"
            prefix += " "
        elif line is not None:
            prefix = f"line {line}: "
        super().__init__(prefix + message)


class CategoryFormatError(CatrouteError):
    """Malformed category file or category construction input."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        prefix = ""
        if path is not None:
            prefix = f"{path}:"
            if line is not None:
                prefix += f"{line}:"
            prefix += " "
        elif line is not None:
            prefix = f"line {line}: "
        super().__init__(prefix + message)


class IdMismatchError(CatrouteError):
    """Category references a vertex id outside the companion graph."""


class DisconnectedGraphError(CatrouteError):
    """Operation requires a connected graph."""


class SizeGuardError(CatrouteError):
    """Input exceeds the size guard of an exhaustive-search operation."""
