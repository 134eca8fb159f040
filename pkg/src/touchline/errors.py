"""Exception hierarchy shared across the package.

Every error that callers are expected to catch derives from TouchlineError.
Errors raised while validating user-supplied payloads carry a ``field``
attribute naming the offending input, which the CLI and HTTP layers surface
verbatim.
"""

from __future__ import annotations

from typing import Optional


class TouchlineError(Exception):
    """Base class for all package errors."""

    field: Optional[str] = None


class OutOfRangeError(TouchlineError, ValueError):
    """A component value falls outside [0, 1] (or a stated sub-range)."""

    def __init__(self, where, value, lo: float = 0.0, hi: float = 1.0):
        self.where = where
        self.value = value
        self.field = str(getattr(where, "name", where))
        super().__init__(f"{self.field}: value {value!r} outside [{lo:g}, {hi:g}]")


class WrongArityError(TouchlineError, ValueError):
    """A full vector was built from something other than 14 components."""

    def __init__(self, got: int):
        self.got = got
        self.field = "values"
        super().__init__(f"expected 14 components, got {got}")


class UnknownLevelError(TouchlineError, ValueError):
    """Categorical observation is not one of High/Medium/Low."""

    def __init__(self, level):
        self.level = level
        self.field = "level"
        super().__init__(f"unknown categorical level {level!r}")


class EmptyMaskError(TouchlineError, ValueError):
    """An attribute mask must name at least one attribute."""

    def __init__(self, message: str = "attribute mask is empty"):
        self.field = "mask"
        super().__init__(message)


class DegenerateBenchmarkError(TouchlineError, ValueError):
    """Min-max normalization needs benchmark max > min."""

    def __init__(self, lo, hi):
        self.field = "benchmark"
        super().__init__(f"benchmark max ({hi!r}) must exceed min ({lo!r})")


class WeightSumViolationError(TouchlineError, ValueError):
    """Aggregation weights must lie on the simplex (sum to 1 within 1e-9)."""

    def __init__(self, total: float):
        self.total = total
        self.field = "weights"
        super().__init__(f"child weights sum to {total!r}, expected 1 within 1e-9")


class MissingLeafError(TouchlineError, KeyError):
    def __init__(self, leaf_id: str):
        self.leaf_id = leaf_id
        self.field = leaf_id
        super().__init__(f"no value supplied for leaf {leaf_id!r}")


class MissingDirectError(TouchlineError, KeyError):
    def __init__(self, attribute):
        self.attribute = attribute
        self.field = str(getattr(attribute, "name", attribute))
        super().__init__(f"no direct score supplied for attribute {self.field}")


class InactiveAttributeError(TouchlineError, KeyError):
    def __init__(self, attribute):
        self.attribute = attribute
        self.field = str(getattr(attribute, "name", attribute))
        super().__init__(f"attribute {self.field} is not active in this vector")


class NegativeSigmaError(TouchlineError, ValueError):
    def __init__(self, sigma: float):
        self.sigma = sigma
        self.field = "sigma"
        super().__init__(f"noise scale must be >= 0, got {sigma!r}")


class LibraryParseError(TouchlineError, ValueError):
    """Strategy library file is malformed."""

    def __init__(self, message: str):
        self.field = "library"
        super().__init__(message)


class DuplicateNameError(TouchlineError, ValueError):
    def __init__(self, name: str):
        self.name = name
        self.field = "name"
        super().__init__(f"duplicate strategy name {name!r}")


class ShapeMismatchError(TouchlineError, ValueError):
    """Two vectors do not share the same active-attribute set."""

    def __init__(self, left, right):
        self.field = "active"
        left_names = [a.name for a in left]
        right_names = [a.name for a in right]
        super().__init__(f"active sets differ: {left_names} vs {right_names}")


class DegenerateMultipliersError(TouchlineError, ValueError):
    def __init__(self):
        self.field = "multipliers"
        super().__init__("multipliers sum to 0 over the active mask")


class EmptyLibraryError(TouchlineError, ValueError):
    def __init__(self):
        self.field = "library"
        super().__init__("strategy library is empty")


class MissingOpponentError(TouchlineError, ValueError):
    def __init__(self, message: str = "operation requires an opponent vector"):
        self.field = "opponent"
        super().__init__(message)


class IoFailureError(TouchlineError, OSError):
    def __init__(self, path, cause: Exception):
        self.path = path
        self.field = "path"
        super().__init__(f"could not write {path}: {cause}")
