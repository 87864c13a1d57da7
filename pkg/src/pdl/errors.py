"""
Exception hierarchy shared by every pdl module.

Library code raises these; the CLI maps them onto exit codes.
"""

from typing import Any


class PdlError(Exception):
    """Base class for all pdl errors."""


class PreconditionError(PdlError, ValueError):
    """Invalid input or a violated precondition of an operation."""


class GirthError(PreconditionError):
    """The graph's girth is below what a construction needs."""

    def __init__(self, girth: int | None, required: int) -> None:
        self.girth = girth
        self.required = required
        super().__init__(f"Girth {girth} is below the required minimum {required}")


class NotOuterplanarError(PreconditionError):
    """An embedding has crossing chords or does not describe its block."""


class BudgetExhaustedError(PdlError, RuntimeError):
    """A bounded effort ran out before reaching an answer.

    Attributes:
        budget: The budget that was exhausted.
        details: Partial results known when the budget ran out.
    """

    def __init__(self, message: str, budget: int, **details: Any) -> None:
        self.budget = budget
        self.details = details
        super().__init__(message)


class ChromaticBudgetError(BudgetExhaustedError):
    """Exact colouring ran out of nodes; carries the best bounds found."""

    def __init__(self, budget: int, lower: int, upper: int) -> None:
        self.lower = lower
        self.upper = upper
        super().__init__(
            f"Chromatic search budget {budget} exhausted; {lower} <= chi <= {upper}",
            budget,
            lower=lower,
            upper=upper,
        )


class ApBudgetError(BudgetExhaustedError):
    """No prime arithmetic progression of the required length was found."""

    def __init__(self, budget: int, length: int) -> None:
        self.length = length
        super().__init__(
            f"No prime arithmetic progression of length {length} found within budget {budget}",
            budget,
            length=length,
        )


class ConstructionError(PdlError, RuntimeError):
    """A constructor produced output that failed its own re-verification."""


class LabelOverflowError(PdlError, OverflowError):
    """A label or prime power left the signed 64-bit range."""


class UnknownVertexError(PreconditionError, KeyError):
    """A vertex is not in the labeling's domain."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "Unknown vertex"
