"""Exception types shared across the package."""

from __future__ import annotations


class DiffhomError(Exception):
    """Base class for all errors raised by this package."""


class NonSquareError(DiffhomError):
    """Determinant requested for a non-square matrix."""


class UnmappedVariableError(DiffhomError):
    """A substitution map does not cover a variable occurring in the input."""

    def __init__(self, variable):
        self.variable = variable
        super().__init__(f"no image for variable {variable!r} in substitution map")


class NotLinearError(DiffhomError):
    """Coefficient extraction requested for a variable of degree above one."""


class IndexOutOfRangeError(DiffhomError):
    """A variable, order, or slot index is outside the permitted range."""


class UnsupportedVariableError(DiffhomError):
    """An operation received a polynomial in variables it does not act on."""


class ResourceLimitError(DiffhomError):
    """A computation would exceed a configured resource cap.

    This is a machine limit, never a mathematical refutation: callers report
    it as a skip, not as a failure.
    """


class InvalidCompositionError(DiffhomError):
    """A vector does not describe a composition (non-negative, fixed sum)."""


class InvalidIndexError(DiffhomError):
    """A nested index tuple violates its admissibility conditions."""


class ConfigError(DiffhomError):
    """A verification-suite configuration is malformed."""
