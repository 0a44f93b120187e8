"""Exception hierarchy for solitonlab.

Every error raised deliberately by this package derives from
SolitonLabError so callers can catch one type at a boundary (the CLI
does exactly that to map failures onto exit codes).
"""

from __future__ import annotations


class SolitonLabError(Exception):
    """Base class for all errors raised by solitonlab."""


class ExpressionSyntaxError(SolitonLabError):
    """Malformed expression source.

    ``offset`` is the 0-based character position where scanning failed.
    """

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class UnknownVariableError(SolitonLabError):
    """An identifier in an expression is not a chart variable.

    Raised at parse time when a chart is supplied, or at evaluation time
    when a free variable has no bound value.
    """

    def __init__(self, name: str, offset: int = -1) -> None:
        if offset >= 0:
            super().__init__(f"unknown variable '{name}' (at offset {offset})")
        else:
            super().__init__(f"unknown variable '{name}'")
        self.name = name
        self.offset = offset


class DomainError(SolitonLabError):
    """Evaluation left the domain of a primitive (ln of a non-positive
    number, division by zero, fractional power of a negative base)."""


class SingularMetricError(SolitonLabError):
    """Metric determinant vanished (|det g| below cutoff) at a point."""


class SignatureMismatchError(SolitonLabError):
    """Eigenvalue signs of g at a point disagree with the declared
    signature."""


class NonPositiveWarpingError(SolitonLabError):
    """A warping or lapse function must stay positive on the region of
    interest and did not."""


class NonPositiveEtaPrimeError(SolitonLabError):
    """The strictly-increasing profile in the Ricci-flat Lorentzian
    construction has a non-positive derivative at a sample point."""


class QuadratureFailureError(SolitonLabError):
    """Adaptive quadrature hit its depth limit before reaching the
    requested tolerance."""


class ConfigError(SolitonLabError):
    """A CLI job description is malformed: unknown family, missing or
    ill-typed keys, unusable grid."""
