"""Exact rational scalars and their text forms.

Rational is fractions.Fraction: always lowest terms, positive denominator,
arbitrary precision.  Decimals never enter a computation; they exist only as a
display rendering next to the exact string.
"""

from fractions import Fraction

from ..errors import DomainError

Rational = Fraction


def parse_rational(text):
    """Parse "p/q" or an integer string into a Rational.

    Decimal notation is rejected: silent precision loss is worse than an error.
    """
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise DomainError(f"expected rational string, got {type(text).__name__}")
    s = text.strip()
    if any(ch in s for ch in ".eE"):
        raise DomainError(f"decimal notation rejected, use p/q: {text!r}")
    try:
        if "/" in s:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational: {text!r}") from exc


def format_rational(value):
    """Render a Rational as "p/q", or "p" when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def decimal_str(value):
    """Display-only decimal rendering of a Rational."""
    return repr(float(Fraction(value)))
