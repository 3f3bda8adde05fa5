"""Exception types shared across the package."""


class SRError(Exception):
    """Base class for errors raised by srpowers."""


class FullSimplex(SRError):
    """The complex is the full simplex, so its Stanley-Reisner ideal is zero."""


class NotDimensionOne(SRError):
    pass


class DiameterTooLarge(SRError):
    pass


class NotAPermutation(SRError, ValueError):
    pass


class ArityMismatch(SRError, ValueError):
    pass


class NotSquarefree(SRError, ValueError):
    pass


class ContainsVariable(SRError, ValueError):
    """A generator of degree at most one where a complex needs I inside m^2."""


class ZeroOrUnit(SRError, ValueError):
    pass


class EmptyFace(SRError, ValueError):
    pass


class NotEquigenerated(SRError, ValueError):
    pass


class UnknownExample(SRError, KeyError):
    pass


class BudgetExceeded(SRError):
    pass


class InvalidShelling(SRError):
    """Raised by check_shelling; ``step`` is the 1-based position that fails."""

    def __init__(self, step, faces=()):
        self.step = step
        self.faces = tuple(faces)
        super().__init__(f"shelling condition fails at step {step}")


class InvalidLinearQuotients(SRError):
    """Raised by check_linear_quotients; ``step`` is the 1-based failing position."""

    def __init__(self, step, blocking=None):
        self.step = step
        self.blocking = blocking
        super().__init__(f"colon ideal is not generated by variables at step {step}")


class DSLSyntaxError(SRError, SyntaxError):
    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class VertexOutOfRange(SRError, ValueError):
    pass
