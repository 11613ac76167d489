"""Truncated q-series with rational leading exponent and ramification.

A :class:`QSeries` stands for::

    q**lead * (c[0] + c[1] q**(1/m) + c[2] q**(2/m) + ...) + O(q**(lead + K/m))

where ``m`` is the ramification and ``K = len(c)``.  Coefficients may be
ints, Fractions, :class:`QuadExt` or :class:`BallComplex`; every operation
is exact for the exact types and tracks the truncation order.
"""

from fractions import Fraction
from math import gcd, lcm

from ..numerics.quadratic import QuadExt
from ..numerics.rational import format_rational


class SeriesError(ArithmeticError):
    """Invalid operation on a truncated series (e.g. inverting zero)."""


def _is_zero(c):
    if isinstance(c, (int, Fraction, QuadExt)):
        return c == 0
    return False


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def schoolbook(a, b, n):
    """First ``n`` coefficients of the product of coefficient lists ``a`` and ``b``."""
    out = [0] * n
    for i in range(min(len(a), n)):
        ai = a[i]
        if _is_zero(ai):
            continue
        for j in range(min(len(b), n - i)):
            out[i + j] += ai * b[j]
    return out


_multiply = schoolbook


def use_multiplication(fn):
    """Swap the coefficient convolution routine; returns the previous one."""
    global _multiply
    previous = _multiply
    _multiply = fn
    return previous


def _rat_gcd(*xs):
    num = 0
    den = 1
    for x in xs:
        x = Fraction(x)
        den = lcm(den, x.denominator)
    for x in xs:
        num = gcd(num, int(Fraction(x) * den))
    return Fraction(num, den)


class QSeries:
    __slots__ = ("lead", "ram", "coeffs")

    def __init__(self, coeffs, lead=0, ram=1):
        if ram < 1:
            raise ValueError("ramification must be a positive integer")
        coeffs = [_norm_coeff(c) for c in coeffs]
        lead = Fraction(lead)
        # strip leading zeros so that coeffs[0] != 0 (or the series is zero to its order)
        k = 0
        while k < len(coeffs) and _is_zero(coeffs[k]):
            k += 1
        self.lead = lead + Fraction(k, ram)
        self.coeffs = tuple(coeffs[k:])
        self.ram = ram

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls, precision, ram=1):
        """The zero series known for exponents below ``precision``."""
        s = cls.__new__(cls)
        s.lead = Fraction(precision)
        s.ram = ram
        s.coeffs = ()
        return s

    @classmethod
    def constant(cls, c, order):
        return cls([c] + [0] * (order - 1))

    @classmethod
    def from_dict(cls, terms, order, ram=1):
        """Series with ``{exponent_index: coeff}`` entries in powers of q**(1/ram), known below ``order/ram``."""
        coeffs = [0] * order
        for k, c in terms.items():
            if k < order:
                coeffs[k] = c
        return cls(coeffs, 0, ram)

    # -- basic properties ---------------------------------------------

    @property
    def order(self):
        """Number of known coefficients past the leading exponent."""
        return len(self.coeffs)

    @property
    def precision(self):
        """Exponents strictly below this are known."""
        return self.lead + Fraction(len(self.coeffs), self.ram)

    def is_zero(self):
        return all(_is_zero(c) for c in self.coeffs)

    def exponents(self):
        return [self.lead + Fraction(k, self.ram) for k in range(len(self.coeffs))]

    def items(self):
        return list(zip(self.exponents(), self.coeffs))

    def coeff(self, e):
        """Coefficient of q**e (exact rational exponent)."""
        e = Fraction(e)
        if e >= self.precision:
            raise SeriesError(f"coefficient of q^{e} is beyond the series order O(q^{self.precision})")
        if e < self.lead:
            return 0
        k = (e - self.lead) * self.ram
        if k.denominator != 1:
            return 0
        return self.coeffs[int(k)]

    def integer_coeffs(self, start, stop):
        """Coefficients of q**start .. q**(stop-1) as a list (integral exponents)."""
        return [self.coeff(e) for e in range(start, stop)]

    def truncate(self, precision):
        """Drop everything at exponent >= precision."""
        precision = Fraction(precision)
        if precision >= self.precision:
            return self
        keep = max(0, int((precision - self.lead) * self.ram))
        if keep == 0:
            return QSeries.zero(min(precision, self.precision), self.ram)
        return QSeries(self.coeffs[:keep], self.lead, self.ram)

    def __repr__(self):
        return f"QSeries({self.format(8)})"

    def format(self, terms=None):
        shown = self.coeffs if terms is None else self.coeffs[:terms]
        parts = []
        for k, c in enumerate(shown):
            if _is_zero(c):
                continue
            text = _fmt(c)
            neg = text.startswith("-") and " " not in text
            if neg:
                text = text[1:]
            elif " " in text:
                text = f"({text})"
            if k:
                mono = "q" if Fraction(k, self.ram) == 1 else f"q^{{{format_rational(Fraction(k, self.ram))}}}"
                text = mono if text == "1" else f"{text}{mono}"
            parts.append((neg, text))
        if not parts:
            body = "0"
        else:
            body = ("-" if parts[0][0] else "") + parts[0][1]
            body += "".join((" - " if neg else " + ") + t for neg, t in parts[1:])
        return f"q^{{{format_rational(self.lead)}}}·({body}) + O(q^{{{format_rational(self.precision)}}})"

    __str__ = format

    def to_json(self):
        return {
            "lead_exp": format_rational(self.lead),
            "ramification": self.ram,
            "coeffs": [_fmt(c) for c in self.coeffs],
        }

    # -- re-gridding --------------------------------------------------

    def regrid(self, lead, ram):
        """Same series re-expressed with a lower lead exponent on a finer grid q**(1/ram)."""
        if ram % self.ram:
            raise ValueError("new ramification must be a multiple of the old one")
        step = ram // self.ram
        offset = (self.lead - lead) * ram
        if offset.denominator != 1 or offset < 0:
            raise ValueError("lead exponent not on the target grid")
        offset = int(offset)
        n = offset + len(self.coeffs) * step
        coeffs = [0] * n
        for k, c in enumerate(self.coeffs):
            coeffs[offset + k * step] = c
        s = QSeries.__new__(QSeries)
        s.lead = Fraction(lead)
        s.ram = ram
        s.coeffs = tuple(coeffs)
        return s

    def _common_grid(self, other):
        # g = p/r in lowest terms; the grid of step 1/r contains every exponent of both
        g = _rat_gcd(Fraction(1, self.ram), Fraction(1, other.ram), self.lead - other.lead)
        return min(self.lead, other.lead), g.denominator

    # -- ring operations ----------------------------------------------

    def _lift(self, other):
        if isinstance(other, QSeries):
            return other
        if isinstance(other, (int, Fraction, QuadExt)) or hasattr(other, "re"):
            return _constant_like(other, self)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        precision = min(self.precision, other.precision)
        lead, ram = self._common_grid(other)
        if lead >= precision:
            return QSeries.zero(precision, ram)
        a = self.regrid(lead, ram) if self.coeffs else None
        b = other.regrid(lead, ram) if other.coeffs else None
        n = int((precision - lead) * ram)
        out = [0] * n
        for s in (a, b):
            if s is None:
                continue
            for k in range(min(n, len(s.coeffs))):
                out[k] = out[k] + s.coeffs[k]
        return QSeries(out, lead, ram)

    __radd__ = __add__

    def __neg__(self):
        s = QSeries.__new__(QSeries)
        s.lead, s.ram, s.coeffs = self.lead, self.ram, tuple(-c for c in self.coeffs)
        return s

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QSeries):
            ram = lcm(self.ram, other.ram)
            lead = self.lead + other.lead
            if not self.coeffs or not other.coeffs:
                # zero to its order: result is zero below (zero's precision + other's lead)
                if not self.coeffs and not other.coeffs:
                    return QSeries.zero(self.precision + other.precision, ram)
                z, nz = (self, other) if not self.coeffs else (other, self)
                return QSeries.zero(z.precision + nz.lead, ram)
            a = self.regrid(self.lead, ram).coeffs
            b = other.regrid(other.lead, ram).coeffs
            n = min(len(self.coeffs) * (ram // self.ram), len(other.coeffs) * (ram // other.ram))
            return QSeries(_multiply(a, b, n), lead, ram)
        if isinstance(other, (int, Fraction, QuadExt)) or hasattr(other, "re"):
            if _is_zero(other):
                return QSeries.zero(self.precision, self.ram)
            s = QSeries.__new__(QSeries)
            s.lead, s.ram = self.lead, self.ram
            s.coeffs = tuple(_norm_coeff(c * other) for c in self.coeffs)
            return s
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, e):
        """Multiply by q**e."""
        s = QSeries.__new__(QSeries)
        s.lead, s.ram, s.coeffs = self.lead + Fraction(e), self.ram, self.coeffs
        return s

    def inverse(self):
        if not self.coeffs:
            raise SeriesError("cannot invert a series that is zero to its order")
        c = self.coeffs
        n = len(c)
        inv0 = _invert_scalar(c[0])
        b = [inv0] + [0] * (n - 1)
        for k in range(1, n):
            acc = 0
            for j in range(1, k + 1):
                if not _is_zero(c[j]):
                    acc = acc + c[j] * b[k - j]
            b[k] = _norm_coeff(-acc * inv0)
        return QSeries(b, -self.lead, self.ram)

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, QuadExt):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = _constant_like(1, self)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def sqrt(self):
        """Square root with constant term +1; requires lead 0 and constant term 1."""
        if not self.coeffs or self.lead != 0 or self.coeffs[0] != 1:
            raise SeriesError("series_sqrt needs a series of the form 1 + O(q^(1/m))")
        c = self.coeffs
        n = len(c)
        b = [1] + [0] * (n - 1)
        half = Fraction(1, 2)
        for k in range(1, n):
            acc = c[k]
            for j in range(1, k):
                acc = acc - b[j] * b[k - j]
            b[k] = _norm_coeff(acc * half)
        return QSeries(b, 0, self.ram)

    # -- calculus -----------------------------------------------------

    def theta(self):
        """``q * d/dq`` applied termwise."""
        coeffs = [_norm_coeff(c * e) for e, c in zip(self.exponents(), self.coeffs)]
        if not coeffs:
            return QSeries.zero(self.precision, self.ram)
        return QSeries(coeffs, self.lead, self.ram)

    def log_derivative(self):
        """``q * s'(q) / s(q)``."""
        if not self.coeffs:
            raise SeriesError("logarithmic derivative of a zero series")
        return self.theta() * self.inverse()

    # -- substitutions ------------------------------------------------

    def substitute_qn(self, n):
        """q -> q**n."""
        if n < 1:
            raise ValueError("n must be a positive integer")
        g = gcd(n, self.ram)
        ram = self.ram // g
        step = n // g
        coeffs = [0] * (len(self.coeffs) * step)
        for k, c in enumerate(self.coeffs):
            coeffs[k * step] = c
        s = QSeries.__new__(QSeries)
        s.lead, s.ram, s.coeffs = self.lead * n, ram, tuple(coeffs)
        return s

    def substitute_root(self, n, beta):
        """tau -> (tau + beta)/n: q**e -> zeta_n**(beta*e) * q**(e/n) for integral e."""
        if n not in (2, 3):
            raise NotImplementedError("substitute_root supports n in {2, 3} only")
        if self.ram != 1 or self.lead.denominator != 1:
            raise ValueError("substitute_root needs a series in integral powers of q")
        zeta = QuadExt.zeta(n) if n == 3 else -1
        coeffs = []
        for e, c in zip(self.exponents(), self.coeffs):
            power = (int(e) * beta) % n
            if n == 2 or power == 0:
                factor = zeta ** power if n == 2 else 1
                coeffs.append(_norm_coeff(c * factor))
            else:
                coeffs.append(c * zeta ** power)
        s = QSeries.__new__(QSeries)
        s.lead = self.lead / n
        s.ram = n
        # exponents e/n for consecutive integers e are consecutive on the 1/n grid
        s.coeffs = tuple(coeffs)
        return s

    def rational_part(self):
        """Coerce QuadExt coefficients with zero irrational part to Fractions; raise otherwise."""
        out = []
        for e, c in self.items():
            if isinstance(c, QuadExt):
                if c.b != 0:
                    raise SeriesError(f"coefficient of q^{e} is irrational: {c}")
                c = c.a
            out.append(c)
        return QSeries(out, self.lead, self.ram)

    def deramify(self):
        """Re-express on the coarsest grid q**(1/m') that holds every nonzero coefficient."""
        step = 0
        for k, c in enumerate(self.coeffs):
            if not _is_zero(c):
                step = gcd(step, k)
        g = gcd(step, self.ram) if step else self.ram
        if g == 1 or not self.coeffs:
            return self
        keep = (len(self.coeffs) // g) * g
        s = QSeries.__new__(QSeries)
        s.lead, s.ram, s.coeffs = self.lead, self.ram // g, tuple(self.coeffs[:keep:g])
        return s


def _fmt(c):
    if isinstance(c, (int, Fraction)):
        return format_rational(c)
    return str(c)


def _invert_scalar(c):
    if isinstance(c, int):
        if c in (1, -1):
            return c
        return Fraction(1, c)
    if isinstance(c, Fraction):
        return 1 / c
    if isinstance(c, QuadExt):
        return c.inverse()
    return 1 / c


def _constant_like(c, template):
    """Constant series with the same absolute precision and grid as ``template``."""
    precision = template.precision
    if precision <= 0:
        return QSeries.zero(precision, template.ram) if _is_zero(c) else _raise_low(precision)
    n = int(precision * template.ram)
    if Fraction(n, template.ram) < precision:
        n += 1
    return QSeries([c] + [0] * (n - 1), 0, template.ram)


def _raise_low(precision):
    raise SeriesError(f"cannot add a constant to a series known only below q^{precision}")
