"""Exception types shared across the package."""


class PolyextError(Exception):
    """Base class for all package errors."""


class ParseError(PolyextError):
    """Malformed textual graph input (carries a line number where known)."""


class ValidationError(PolyextError):
    """Input violates a documented precondition (self-loop, bad index, ...)."""


class StructureError(PolyextError):
    """Graph lacks the structure an operation requires (connectivity, outerplanarity, ...)."""


class CapError(PolyextError):
    """Query or operation incompatible with a polynomial's exponent caps."""


class ContractError(PolyextError):
    """Internal contract broke: a condition the theory guarantees failed to hold."""


class BudgetError(PolyextError):
    """Requested computation exceeds the configured combinatorial budget."""


class ClassificationError(PolyextError):
    """A face or configuration fits none of the recognised structural shapes."""


class DiscrepancyError(PolyextError):
    """Structural route and polynomial oracle disagree.

    This is the one error that signals scientific interest rather than bad
    input; callers surface it verbatim (the CLI maps it to exit code 2).
    """

    def __init__(self, message, record=None):
        super().__init__(message)
        self.record = record or {}
