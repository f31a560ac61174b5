"""Exception types shared across the package.

The split that matters for samplers: EvaluationPoisoned marks a numeric
singularity hit during evaluation (division by a zero value, log of zero,
overflow to inf, any NaN).  Samplers catch it, count the point and move on.
Every other exception is a structural usage error and propagates.
"""


class DimensionMismatch(ValueError):
    """Operands or arguments have incompatible dimensions."""


class EvaluationPoisoned(ArithmeticError):
    """A singularity or non-finite value appeared during evaluation."""


class OutsideDomain(ValueError):
    """A point lies outside the open unit ball (or other required domain)."""


class UnsupportedSpace(ValueError):
    """The requested operation has no supported closed form on this space."""


class ParseError(ValueError):
    """Syntax error in an expression string.  Carries the offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ArityError(ParseError):
    """A variable index exceeds the declared arity."""
