"""Exception types raised across the package.

Every error derives from :class:`HolantError`; where a builtin exception
already describes the failure (division by zero, a bad index) the class also
inherits from it so ordinary ``except`` clauses keep working.
"""


class HolantError(Exception):
    pass


# scalar
class DivisionByZero(HolantError, ZeroDivisionError):
    pass


class NonPositiveRadicand(HolantError, ValueError):
    pass


# signature
class UnknownName(HolantError, KeyError):
    pass


class ArityMismatch(HolantError, ValueError):
    pass


class IndexOutOfRange(HolantError, IndexError):
    pass


class IndicesEqual(HolantError, ValueError):
    pass


class ZeroScale(HolantError, ValueError):
    pass


class ShapeMismatch(HolantError, ValueError):
    pass


class NotSymmetric(HolantError, ValueError):
    pass


# symmetrize
class InternalAsymmetry(HolantError, AssertionError):
    """A symmetrization came out asymmetric; this is a bug, never user error."""


class PreconditionViolated(HolantError, ValueError):
    pass


class WitnessNotFound(HolantError):
    """No (sigma, eps) pair passed the witness predicates.

    For inputs that meet the preconditions this would falsify the underlying
    proposition, so the offending signature is kept on the exception.
    """

    def __init__(self, message, signature=None):
        super().__init__(message)
        self.signature = signature


# grid
class MalformedGrid(HolantError, ValueError):
    pass


class TooManyEdges(HolantError, ValueError):
    pass


class TooManyVariables(HolantError, ValueError):
    pass


class UnusedVariable(HolantError, ValueError):
    pass


# rewrite
class MalformedRecipe(HolantError, ValueError):
    def __init__(self, message, step=None):
        if step is not None:
            message = f"step {step}: {message}"
        super().__init__(message)
        self.step = step


class PatternMismatch(HolantError, ValueError):
    pass


class SingularMatrix(HolantError, ValueError):
    pass


class NotBipartite(HolantError, ValueError):
    pass


# solver
class NotDupGrid(HolantError, ValueError):
    pass


class DegreeTooHigh(HolantError, ValueError):
    pass
