"""Dense univariate polynomials with exact coefficients."""

from fractions import Fraction
from itertools import zip_longest

from ..numerics.rational import as_fraction, format_rational, parse_rational

NEG_INF = float("-inf")


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Polynomial ``sum(c[i] * X**i)``; coefficients are ints or Fractions."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(_normalize(c) for c in coeffs)

    @classmethod
    def from_factors(cls, *factors, scale=1):
        result = cls([scale])
        for f in factors:
            result = result * cls(f)
        return result

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def parse(cls, text):
        """Whitespace-separated ``p/q`` tokens, constant term first."""
        return cls(parse_rational(tok) for tok in text.split())

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = Poly([1])
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, x):
        """Horner evaluation; works for any ring element supporting + and *."""
        if not self.coeffs:
            return 0 * x
        acc = self.coeffs[-1] + 0 * x
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def theta(self):
        """``X * d/dX``."""
        return Poly(k * c for k, c in enumerate(self.coeffs))

    def scale(self, c):
        return Poly(c * a for a in self.coeffs)

    def content_lcm(self):
        """Least common multiple of the coefficient denominators."""
        from math import lcm

        den = 1
        for c in self.coeffs:
            den = lcm(den, as_fraction(c).denominator)
        return den

    def to_tokens(self):
        return [format_rational(c) for c in self.coeffs]

    def format(self, var="x", ascending=True):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                mono = ""
            elif k == 1:
                mono = var
            else:
                mono = f"{var}^{k}"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{format_rational(mag)}{mono}" if as_fraction(mag).denominator == 1 else f"({format_rational(mag)}){mono}"
            else:
                body = format_rational(mag)
            terms.append((c < 0, body))
        if not ascending:
            terms.reverse()
        if not terms:
            return "0"
        out = ("-" if terms[0][0] else "") + terms[0][1]
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"Poly([{', '.join(self.to_tokens())}])"

    def __str__(self):
        return self.format()


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c
