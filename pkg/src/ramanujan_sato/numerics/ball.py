"""Midpoint-radius ball arithmetic on top of mpmath's low-level binary floats.

Every operation returns a ball that encloses the exact result of applying
the operation to any points of the input balls.  Midpoints are rounded to
nearest at the working precision; the rounding error and the propagated
input radii are added to the radius with upward rounding.
"""

import math
from fractions import Fraction

from mpmath.libmp import (
    fzero,
    from_int,
    from_man_exp,
    from_rational,
    mpf_abs,
    mpf_add,
    mpf_cmp,
    mpf_div,
    mpf_mul,
    mpf_neg,
    mpf_pos,
    mpf_shift,
    mpf_sqrt,
    mpf_sub,
    round_ceiling,
    round_floor,
    round_nearest,
    to_float,
    to_str,
)

from .rational import as_fraction

DEFAULT_PREC = 192
RAD_PREC = 32


class BallDomainError(ArithmeticError):
    """An operation was applied to a ball that leaves its domain (e.g. sqrt of a ball touching 0)."""


# --- radius helpers (all quantities non-negative, rounded upward) -------------

def _up_add(*xs):
    total = fzero
    for x in xs:
        total = mpf_add(total, x, RAD_PREC, round_ceiling)
    return total


def _up_mul(a, b):
    return mpf_mul(a, b, RAD_PREC, round_ceiling)


def _up_div(a, b):
    return mpf_div(a, b, RAD_PREC, round_ceiling)


def _round_err(exact, rounded):
    return mpf_abs(mpf_sub(exact, rounded, RAD_PREC, round_ceiling))


def _rel_err(value, prec):
    # bound for one nearest-rounded operation of unknown exact result
    return mpf_shift(mpf_abs(value), 1 - prec)


class Ball:
    """Real ball ``[mid - rad, mid + rad]`` carried at ``prec`` bits."""

    __slots__ = ("mid", "rad", "prec")

    def __init__(self, mid, rad=fzero, prec=DEFAULT_PREC):
        self.mid = mid
        self.rad = rad
        self.prec = prec

    # -- construction -------------------------------------------------

    @classmethod
    def exact(cls, value, prec=DEFAULT_PREC):
        """Enclose an int, Fraction, ``"p/q"`` string or Ball."""
        if isinstance(value, Ball):
            return value
        if isinstance(value, int):
            exact = from_int(value)
            mid = mpf_pos(exact, prec, round_nearest)
            return cls(mid, _round_err(exact, mid), prec)
        q = as_fraction(value)
        if q.denominator == 1:
            return cls.exact(q.numerator, prec)
        mid = from_rational(q.numerator, q.denominator, prec, round_nearest)
        return cls(mid, _rel_err(mid, prec), prec)

    @classmethod
    def from_mid_rad(cls, mid, rad, prec=DEFAULT_PREC):
        """Ball from a fixed-point pair: midpoint ``mid`` and radius ``rad`` given as (man, exp) tuples."""
        m = from_man_exp(mid[0], mid[1])
        r = from_man_exp(rad[0], rad[1])
        rounded = mpf_pos(m, prec, round_nearest)
        return cls(rounded, _up_add(r, _round_err(m, rounded)), prec)

    def _lift(self, other):
        if isinstance(other, Ball):
            return other
        if isinstance(other, (int, Fraction)):
            return Ball.exact(other, self.prec)
        return None

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        prec = max(self.prec, other.prec)
        exact = mpf_add(self.mid, other.mid)
        mid = mpf_pos(exact, prec, round_nearest)
        return Ball(mid, _up_add(self.rad, other.rad, _round_err(exact, mid)), prec)

    __radd__ = __add__

    def __neg__(self):
        return Ball(mpf_neg(self.mid), self.rad, self.prec)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        prec = max(self.prec, other.prec)
        exact = mpf_mul(self.mid, other.mid)
        mid = mpf_pos(exact, prec, round_nearest)
        rad = _up_add(
            _up_mul(mpf_abs(self.mid), other.rad),
            _up_mul(mpf_abs(other.mid), self.rad),
            _up_mul(self.rad, other.rad),
            _round_err(exact, mid),
        )
        return Ball(mid, rad, prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        prec = max(self.prec, other.prec)
        denom = mpf_sub(mpf_abs(other.mid), other.rad, RAD_PREC, round_floor)
        if mpf_cmp(denom, fzero) <= 0:
            raise ZeroDivisionError("division by a ball containing zero")
        q = mpf_div(self.mid, other.mid, prec, round_nearest)
        err = _rel_err(q, prec)
        spread = _up_add(self.rad, _up_mul(_up_add(mpf_abs(q), err), other.rad))
        return Ball(q, _up_add(_up_div(spread, denom), err), prec)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return Ball.exact(1, self.prec) / (self ** (-k))
        result = Ball.exact(1, self.prec)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def sqrt(self, name="value"):
        """Positive square root; the whole ball must be strictly positive."""
        lower = mpf_sub(self.mid, self.rad, self.prec + 8, round_floor)
        if mpf_cmp(lower, fzero) <= 0:
            raise BallDomainError(f"square root of non-positive {name}: {self}")
        s = mpf_sqrt(self.mid, self.prec, round_nearest)
        err = _rel_err(s, self.prec)
        root_lower = mpf_sqrt(lower, RAD_PREC, round_floor)
        return Ball(s, _up_add(_up_div(self.rad, root_lower), err), self.prec)

    def exp(self):
        return BallComplex(self, Ball.exact(0, self.prec)).exp().re

    def inflate(self, err):
        """Widen the radius by ``err`` (a non-negative Fraction or int)."""
        err = as_fraction(err)
        if err < 0:
            raise ValueError("error bound must be non-negative")
        if err == 0:
            return self
        e = from_rational(err.numerator, err.denominator, RAD_PREC, round_ceiling)
        return Ball(self.mid, _up_add(self.rad, e), self.prec)

    def with_prec(self, prec):
        mid = mpf_pos(self.mid, prec, round_nearest)
        return Ball(mid, _up_add(self.rad, _round_err(self.mid, mid)), prec)

    # -- queries ------------------------------------------------------

    def lower(self):
        return mpf_sub(self.mid, self.rad, self.prec + RAD_PREC, round_floor)

    def upper(self):
        return mpf_add(self.mid, self.rad, self.prec + RAD_PREC, round_ceiling)

    def abs_upper(self):
        return _up_add(mpf_abs(self.mid), self.rad)

    def is_positive(self):
        return mpf_cmp(self.lower(), fzero) > 0

    def is_negative(self):
        return mpf_cmp(self.upper(), fzero) < 0

    def contains_zero(self):
        return not (self.is_positive() or self.is_negative())

    def contains(self, value):
        """True if the exact value (int/Fraction) or whole ball lies inside."""
        if isinstance(value, Ball):
            return (
                mpf_cmp(self.lower(), value.lower()) <= 0
                and mpf_cmp(value.upper(), self.upper()) <= 0
            )
        q = as_fraction(value)
        # compare q against the endpoints exactly: scale to integers
        lo, hi = _exact_fraction(self.lower()), _exact_fraction(self.upper())
        return lo <= q <= hi

    def overlaps(self, other):
        return mpf_cmp(self.lower(), other.upper()) <= 0 and mpf_cmp(other.lower(), self.upper()) <= 0

    def distance_bound(self, other):
        """Upper bound on |a - b| over all points a of self and b of other."""
        gap = mpf_abs(mpf_sub(self.mid, other.mid, RAD_PREC, round_ceiling))
        return _up_add(gap, self.rad, other.rad)

    def agreement_digits(self, other):
        """Largest d with every point of self within 10**-d of every point of other."""
        bound = self.distance_bound(other)
        if bound == fzero:
            return max(self.prec, other.prec)  # identical exact values
        return math.floor(-_log10(bound))

    def radius_float(self):
        return to_float(self.rad, rnd=round_ceiling)

    def __float__(self):
        return to_float(self.mid)

    def mid_str(self, digits=None):
        if digits is None:
            digits = max(1, int(self.prec * 0.30103))
        return to_str(self.mid, digits)

    def __repr__(self):
        return f"Ball({self.mid_str(20)} +/- {to_str(self.rad, 3)})"

    __str__ = __repr__

    def to_json(self):
        return {"mid": self.mid_str(), "rad": to_str(self.rad, 6), "prec": self.prec}


def _exact_fraction(v):
    sign, man, exp, _ = v
    if not man:
        return Fraction(0)
    value = Fraction(man) * (Fraction(2) ** exp)
    return -value if sign else value


def _log10(v):
    # v is a positive mpf; works far outside the double range
    sign, man, exp, bc = v
    return (math.log2(man / (1 << (bc - 1))) + exp + bc - 1) * math.log10(2)


class BallComplex:
    """Rectangular complex enclosure ``re + i*im``."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        self.re = re
        self.im = im if im is not None else Ball.exact(0, re.prec)

    @property
    def prec(self):
        return max(self.re.prec, self.im.prec)

    @classmethod
    def exact(cls, value, prec=DEFAULT_PREC):
        if isinstance(value, BallComplex):
            return value
        if isinstance(value, Ball):
            return cls(value, Ball.exact(0, value.prec))
        return cls(Ball.exact(value, prec), Ball.exact(0, prec))

    def _lift(self, other):
        if isinstance(other, BallComplex):
            return other
        if isinstance(other, (Ball, int, Fraction)):
            return BallComplex.exact(other, self.prec)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return BallComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return BallComplex(-self.re, -self.im)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return BallComplex(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return BallComplex(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self):
        return BallComplex(self.re, -self.im)

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.abs2()
        return BallComplex(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (self ** (-k)).inverse()
        result = BallComplex.exact(1, self.prec)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def abs_upper(self):
        return _up_add(self.re.abs_upper(), self.im.abs_upper())

    def exp(self):
        """exp(z) by halving, a Taylor polynomial with a rigorous remainder, then squaring."""
        prec = self.prec
        size = self.abs_upper()
        k = max(0, int(_log2_ceil(size)) + 2)
        work = prec + k + 16
        z = BallComplex(self.re.with_prec(work), self.im.with_prec(work))
        scale = Ball(from_man_exp(1, -k), fzero, work)
        w = z * scale
        wabs = w.abs_upper()  # at most 1/2
        total = BallComplex.exact(1, work)
        term = BallComplex.exact(1, work)
        j = 0
        bound = fzero
        while True:
            j += 1
            term = term * w / j
            total = total + term
            # remainder after term j: |w|^(j+1)/(j+1)! * 1/(1 - |w|/(j+2)) <= 2*|w|^(j+1)/(j+1)!
            bound = _up_mul(_up_mul(term.abs_upper(), _up_div(wabs, from_int(j + 1))), from_int(2))
            if mpf_cmp(bound, mpf_shift(from_int(1), -work - 4)) < 0:
                break
        total = BallComplex(
            Ball(total.re.mid, _up_add(total.re.rad, bound), work),
            Ball(total.im.mid, _up_add(total.im.rad, bound), work),
        )
        for _ in range(k):
            total = total * total
        return BallComplex(total.re.with_prec(prec), total.im.with_prec(prec))

    def inflate(self, err):
        return BallComplex(self.re.inflate(err), self.im.inflate(err))

    def contains_zero_im(self):
        return self.im.contains_zero()

    def __repr__(self):
        return f"BallComplex({self.re!r}, {self.im!r})"

    def to_json(self):
        return {"re": self.re.to_json(), "im": self.im.to_json()}


def _log2_ceil(v):
    sign, man, exp, bc = v
    if not man:
        return -math.inf
    return exp + bc


def sqrt_int(n, prec=DEFAULT_PREC):
    """Ball enclosing sqrt(n) for a non-negative integer n."""
    if n < 0:
        raise BallDomainError(f"square root of negative integer {n}")
    if n == 0:
        return Ball.exact(0, prec)
    return Ball.exact(n, prec).sqrt()
