"""Exact truncated q-series algebra."""

from .eta import EtaQuotientSpec, eta_product_coeffs, eta_quotient
from .poly import Poly
from .recognize import NotAPolynomialError, coefficients_in_x, express_in_x
from .series import QSeries, SeriesError, schoolbook, use_multiplication


def series_mul(a, b):
    return a * b


def series_add(a, b):
    return a + b


def series_inv(s):
    return s.inverse()


def series_pow(s, k):
    return s ** k


def series_sqrt(s):
    return s.sqrt()


def q_log_derivative(s):
    return s.log_derivative()


def substitute_qn(s, n):
    return s.substitute_qn(n)


def substitute_root(s, n, beta):
    return s.substitute_root(n, beta)


def compose_poly(p, s):
    """p(s) for a polynomial p and a series s."""
    return p(s) if p.coeffs else QSeries.zero(s.precision)


__all__ = [
    "EtaQuotientSpec",
    "NotAPolynomialError",
    "Poly",
    "QSeries",
    "SeriesError",
    "coefficients_in_x",
    "compose_poly",
    "eta_product_coeffs",
    "eta_quotient",
    "express_in_x",
    "q_log_derivative",
    "schoolbook",
    "series_add",
    "series_inv",
    "series_mul",
    "series_pow",
    "series_sqrt",
    "substitute_qn",
    "substitute_root",
    "use_multiplication",
]
