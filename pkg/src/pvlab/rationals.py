"""Exact rational parsing and formatting.

Probabilities travel through the library as fractions.Fraction and cross the
text boundary as "num/den" strings or exact decimal literals. Floats appear
only in display fields and rate columns.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" or an exact decimal literal ("0.25", "1", "2e-3")."""
    s = text.strip()
    if not s:
        raise ParseError("empty rational literal")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None
    except ValueError:
        raise ParseError(f"not an exact rational literal: {text!r}") from None


def parse_probability(text: str) -> Fraction:
    value = parse_rational(text)
    if not 0 <= value <= 1:
        raise ParseError(f"probability out of range [0, 1]: {text!r}")
    return value


def format_rational(value: Fraction) -> str:
    # str() gives "0", "1", "3/8": integers drop the slash, which the parser
    # accepts back, so round trips are lossless.
    return str(value)


def format_rate(value: float) -> str:
    """12 significant digits; infinities spelled plainly."""
    if value == float("inf"):
        return "inf"
    if value == float("-inf"):
        return "-inf"
    return f"{value:.12g}"
