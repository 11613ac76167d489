"""Recognising q-series as polynomials or power series in a uniformiser x = q + O(q^2)."""

from fractions import Fraction

from .poly import Poly
from .series import QSeries, SeriesError


class NotAPolynomialError(ValueError):
    """The series is not a polynomial of the requested degree in x."""

    def __init__(self, message, exponent=None):
        super().__init__(message)
        self.exponent = exponent


def _check_uniformiser(x):
    if x.ram != 1 or x.lead != 1 or not x.coeffs or x.coeffs[0] != 1:
        raise ValueError("x must have the form q + O(q^2)")


def coefficients_in_x(s, x, count):
    """First ``count`` coefficients A_k of s = sum A_k x^k, found by triangular elimination.

    Returns ``(coeffs, residual)`` where residual = s - sum A_k x^k.
    """
    _check_uniformiser(x)
    if s.ram != 1 and s.coeffs:
        s = s.deramify()
        if s.ram != 1:
            raise ValueError("series has fractional exponents; it is not a power series in x")
    if s.coeffs and s.lead < 0:
        raise NotAPolynomialError(f"series has a pole of order {-s.lead} at q = 0", int(s.lead))
    if s.precision < count:
        raise SeriesError(f"series known only below q^{s.precision}; need {count} coefficients")
    residual = s
    power = QSeries.constant(1, int(s.precision) + 1)
    out = []
    for k in range(count):
        c = residual.coeff(k)
        out.append(c)
        if c != 0:
            residual = residual - power * c
        power = power * x
    return out, residual


def express_in_x(s, x, maxdeg, guard=8):
    """The polynomial P with deg P <= maxdeg and P(x) = s through the series order.

    Every coefficient of ``s - P(x)`` that is known must vanish, and at
    least ``guard`` of them must lie beyond ``x**maxdeg``.
    """
    coeffs, residual = coefficients_in_x(s, x, maxdeg + 1)
    window = residual.precision - (maxdeg + 1)
    if window < guard:
        raise SeriesError(
            f"only {window} guard coefficients beyond degree {maxdeg}; need {guard} (raise the order)"
        )
    for e, c in residual.items():
        if c != 0:
            raise NotAPolynomialError(
                f"not a polynomial of degree <= {maxdeg} in x: residual has q^{e} coefficient {c}",
                e,
            )
    return Poly(Fraction(c) for c in coeffs)
