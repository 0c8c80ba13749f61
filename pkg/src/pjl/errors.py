"""Exception types shared across the toolkit."""


class PjlError(Exception):
    """Base class for all toolkit errors."""


class ExtensionBudgetExceeded(PjlError):
    """Adjoining another algebraic generator would push the field tower past
    its configured total-degree budget."""


class CutoffTooSmall(PjlError):
    """A series or tree computation could not produce the requested data
    below the given truncation order.  Retry with a larger cutoff."""


class NotSeparated(PjlError):
    """Root branches could not be told apart (or an order could not be
    certified) at the current truncation order.  Retry with a larger cutoff."""


class NotJacobianPair(PjlError):
    """The operation requires f_x*g_y - f_y*g_x to be a nonzero constant."""


class NoSolution(PjlError):
    """A linear system that theory says must be solvable turned out
    inconsistent; indicates invalid input (or a bug upstream)."""


class ParseError(PjlError):
    """Polynomial expression syntax error; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
