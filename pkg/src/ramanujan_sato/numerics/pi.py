"""Reference enclosures of pi from Machin-type arctangent formulas.

These are deliberately unrelated to the modular-function series, so the
acceptance checks compare against an independent value.
"""

from functools import lru_cache

from mpmath.libmp import from_man_exp

from .ball import Ball

MACHIN = ((16, 5), (-4, 239))
# Gauss: 48 atan(1/18) + 32 atan(1/57) - 20 atan(1/239)
GAUSS = ((48, 18), (32, 57), (-20, 239))


def _atan_inv_fixed(k, scale_bits):
    """floor-ish fixed-point value of atan(1/k) * 2**scale_bits and an error bound in units."""
    one = 1 << scale_bits
    power = one // k
    k2 = k * k
    total = 0
    j = 0
    while power:
        term = power // (2 * j + 1)
        total += -term if j & 1 else term
        power //= k2
        j += 1
    # each term is off by < 2 units from truncations; the alternating tail is < 2 units
    return total, 2 * j + 4


def machin_pi(prec, formula=MACHIN):
    """Enclosure of pi from a sum of ``coeff * atan(1/k)`` terms."""
    if prec < 16:
        raise ValueError("prec must be at least 16 bits")
    scale = prec + 24
    total = 0
    err = 0
    for coeff, k in formula:
        value, e = _atan_inv_fixed(k, scale)
        total += coeff * value
        err += abs(coeff) * e
    return Ball.from_mid_rad((total, -scale), (err, -scale), prec)


@lru_cache(maxsize=32)
def ref_pi(prec):
    """Ball containing pi with radius 2**(2 - prec); balls at higher precision nest inside.

    The midpoint is pi rounded to a multiple of 2**-prec (error below
    2**(-prec-1) plus the Machin error, itself under 2**(-prec-10)), so for
    lo < hi the gap between midpoints plus the radius at hi is at most
    2**-lo * (1/2 + 1/4 + 2 + tiny) < 2**(2 - lo).
    """
    if prec < 16:
        raise ValueError("prec must be at least 16 bits")
    guard = 24
    total = 0
    err = 0
    for coeff, k in MACHIN:
        value, e = _atan_inv_fixed(k, prec + guard)
        total += coeff * value
        err += abs(coeff) * e
    assert err < 1 << (guard - 10)
    mid = (total + (1 << (guard - 1))) >> guard
    return Ball(from_man_exp(mid, -prec), from_man_exp(4, -prec), prec + 2)
