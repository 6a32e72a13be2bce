"""Exception hierarchy. Each class maps to a CLI exit code."""


class HeatTraceError(Exception):
    exit_code = 1


class ValidationError(HeatTraceError, ValueError):
    """Bad input: geometry parameters, weight flags, t-grid, alpha range."""

    exit_code = 2


class ToleranceFailure(HeatTraceError):
    """A numerical check missed its tolerance."""

    exit_code = 3


class InternalConsistencyError(HeatTraceError):
    """An identity that must hold by construction did not."""

    exit_code = 4


class PoleError(ValidationError):
    """Evaluation requested at a pole of a Gamma factor."""


class ExceptionalAlphaError(PoleError):
    """alpha in {1, 2}: use the exceptional (dropped-pole) formulas."""


class RootFindingError(HeatTraceError):
    """Bracketing or Newton refinement failed; eigenvalues would be lost."""

    exit_code = 4
