"""Exact rationals, quadratic fields, and verified ball arithmetic."""

from .ball import DEFAULT_PREC, Ball, BallComplex, BallDomainError, sqrt_int
from .pi import GAUSS, MACHIN, machin_pi, ref_pi
from .quadratic import FieldMismatchError, QuadExt
from .rational import Fraction, format_rational, parse_rational, squarefree_part


def quad_eval(x, prec=DEFAULT_PREC):
    """Ball enclosing the real embedding a + b*sqrt(d) (positive root, d > 0)."""
    if x.b == 0:
        return Ball.exact(x.a, prec)
    if x.d < 0:
        raise ValueError("quad_eval needs d > 0; use quad_eval_complex")
    return Ball.exact(x.a, prec) + Ball.exact(x.b, prec) * sqrt_int(x.d, prec)


def quad_eval_complex(x, prec=DEFAULT_PREC):
    """BallComplex enclosing a + b*sqrt(d) with sqrt(d) = i*sqrt(|d|) for d < 0."""
    if x.d > 0 or x.b == 0:
        return BallComplex.exact(quad_eval(x, prec))
    return BallComplex(Ball.exact(x.a, prec), Ball.exact(x.b, prec) * sqrt_int(-x.d, prec))


def ball_sqrt(x, name="value"):
    return x.sqrt(name)


__all__ = [
    "DEFAULT_PREC",
    "GAUSS",
    "MACHIN",
    "Ball",
    "BallComplex",
    "BallDomainError",
    "FieldMismatchError",
    "Fraction",
    "QuadExt",
    "ball_sqrt",
    "format_rational",
    "machin_pi",
    "parse_rational",
    "quad_eval",
    "quad_eval_complex",
    "ref_pi",
    "sqrt_int",
    "squarefree_part",
]
