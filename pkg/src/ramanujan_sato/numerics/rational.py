"""Helpers around :class:`fractions.Fraction`, the exact rational type used throughout."""

from fractions import Fraction

__all__ = ["Fraction", "as_fraction", "format_rational", "parse_rational", "squarefree_part"]


def as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(value):
    """Serialize as ``"p/q"`` (or ``"p"`` when the denominator is 1)."""
    value = as_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text):
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed rational literal {text!r}") from None


def squarefree_part(n):
    """Return ``(s, d)`` with ``n == s*s*d`` and ``d`` squarefree (sign kept in ``d``)."""
    if n == 0:
        return 0, 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    s = 1
    d = 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            d *= p
        p += 1 if p == 2 else 2
    d *= n
    return s, sign * d
