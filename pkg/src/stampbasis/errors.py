"""Exception hierarchy shared by the search kernels, builders and the CLI."""


class StampBasisError(Exception):
    """Base class; ``reason`` is the machine-parsable tag printed by the CLI."""

    reason = "error"


class SearchTooLarge(StampBasisError):
    reason = "search-too-large"


class NotABasis(StampBasisError):
    reason = "not-a-basis"


class Infeasible(StampBasisError):
    reason = "infeasible"


class PreconditionFailed(Infeasible):
    reason = "precondition-fails"


class TargetNotReached(Infeasible):
    reason = "target-not-reached"

    def __init__(self, message, run=()):
        super().__init__(message)
        self.run = tuple(run)


class NoRepresentation(Infeasible):
    reason = "no-representation"

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class MalformedDescriptor(StampBasisError):
    reason = "malformed-json"


class VerificationMismatch(StampBasisError):
    """A claimed field disagrees with the recomputed value."""

    def __init__(self, field, claimed, actual):
        super().__init__(f"{field} mismatch: claimed {claimed}, computed {actual}")
        self.field, self.claimed, self.actual = field, claimed, actual
        self.reason = f"{field}-mismatch"
