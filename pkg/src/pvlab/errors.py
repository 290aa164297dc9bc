"""Exception types shared across the library.

Everything raised on purpose derives from PvlabError so callers (and the
command line front end) can catch one base class.
"""

from __future__ import annotations

from fractions import Fraction


class PvlabError(Exception):
    """Base class for all library errors."""


class ValidationError(PvlabError):
    """An input value violates a structural invariant."""


class ParseError(PvlabError):
    """A text input (distribution file, code file, rational literal) is malformed."""

    def __init__(self, message: str, *, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MassNotNormalized(PvlabError):
    def __init__(self, total: Fraction):
        self.total = total
        super().__init__(f"mass entries sum to {total}, expected exactly 1")


class DuplicateEntry(PvlabError):
    def __init__(self, x_label: str, y_label: str):
        self.x_label = x_label
        self.y_label = y_label
        super().__init__(f"duplicate mass entry for ({x_label!r}, {y_label!r})")


class ZeroMarginal(PvlabError):
    def __init__(self, label: str, axis: str = "y"):
        self.label = label
        self.axis = axis
        super().__init__(f"{axis}-marginal of {label!r} is zero, conditional law undefined")


class AlphaTooLarge(PvlabError):
    def __init__(self, alpha: Fraction, support_size: int):
        self.alpha = alpha
        self.support_size = support_size
        super().__init__(
            f"alpha = {alpha} is not below 1/{support_size} "
            f"(one over the hypothesis support size)"
        )


class NoStabilization(PvlabError):
    def __init__(self, theta_cap: int):
        self.theta_cap = theta_cap
        super().__init__(
            f"tilted low-mass set did not settle on the strict-dominance set for any "
            f"exponent up to {theta_cap}; the joint has an extremely close posterior "
            f"ratio, retry with a larger cap"
        )


class DegeneratePe1(PvlabError):
    def __init__(self) -> None:
        super().__init__("minimum error probability equals 1, threshold family undefined")


class BlocklengthTooLarge(PvlabError):
    def __init__(self, n: int, ceiling: int):
        self.n = n
        self.ceiling = ceiling
        super().__init__(
            f"blocklength {n} exceeds the enumeration ceiling {ceiling} "
            f"(override with PVLAB_ENUM_CEILING)"
        )


class RangeError(PvlabError):
    """A combinatorial argument lies outside its admissible range."""


class TooManyCodewords(PvlabError):
    def __init__(self, m: int, n: int):
        self.m = m
        self.n = n
        super().__init__(f"cannot place {m} distinct codewords of length {n} (max {2 ** n})")


class EmptySeries(PvlabError):
    def __init__(self) -> None:
        super().__init__("blocklength grid is empty, nothing to compute")
