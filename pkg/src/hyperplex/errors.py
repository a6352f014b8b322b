"""Exception hierarchy. Every error carries a stable string code used by the CLI."""


class HyperplexError(Exception):
    code = "error"


class ZeroNorm(HyperplexError, ZeroDivisionError):
    """Inverse or division by the zero quaternion."""

    code = "zero_norm"


class SingularNumber(HyperplexError, ZeroDivisionError):
    """A bicomplex value with vanishing complex square norm where an inverse is needed."""

    code = "singular_number"


class ZeroInput(HyperplexError, ValueError):
    code = "zero_input"


class NotDifferentiable(HyperplexError, ArithmeticError):
    code = "not_differentiable"


class EvaluationFailure(HyperplexError, ArithmeticError):
    code = "evaluation_failure"


class OrderTooHigh(HyperplexError, ValueError):
    code = "order_too_high"


class QuadratureFailure(HyperplexError, ArithmeticError):
    code = "quadrature_failure"


class SingularOnCurve(HyperplexError, ArithmeticError):
    code = "singular_on_curve"


class NonIntegerResult(HyperplexError, ArithmeticError):
    """Raised when a twining integral does not snap to an integer pair.

    The unsnapped value is kept on ``raw`` so callers can inspect it.
    """

    code = "non_integer_result"

    def __init__(self, message, raw=None, residual=None):
        super().__init__(message)
        self.raw = raw
        self.residual = residual


class PreconditionUnverified(HyperplexError, ValueError):
    code = "precondition_unverified"


class ParseError(HyperplexError, ValueError):
    code = "parse_error"

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UsageError(HyperplexError, ValueError):
    code = "usage_error"
