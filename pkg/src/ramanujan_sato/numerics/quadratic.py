"""Exact arithmetic in quadratic fields Q(sqrt(d))."""

from fractions import Fraction

from .rational import as_fraction, format_rational, parse_rational, squarefree_part


class FieldMismatchError(ValueError):
    """Raised when elements of two different quadratic fields are combined."""


def _check_d(d):
    if not isinstance(d, int) or d in (0, 1):
        raise ValueError(f"quadratic field parameter must be an integer other than 0, 1 (got {d!r})")
    s, core = squarefree_part(d)
    if s != 1:
        raise ValueError(f"d={d} is not squarefree")
    return d


class QuadExt:
    """The element ``a + b*sqrt(d)`` of Q(sqrt(d)), with ``d`` squarefree.

    For ``d < 0`` the square root is ``i*sqrt(|d|)``.  Plain ints and
    Fractions mix freely with any field; two QuadExt values only mix when
    their ``d`` agree.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=-1):
        self.a = as_fraction(a)
        self.b = as_fraction(b)
        self.d = _check_d(d)

    @classmethod
    def from_surd(cls, p, s, radicand, r=1):
        """``(p + s*sqrt(radicand)) / r`` with any integer radicand; squares are pulled out."""
        k, core = squarefree_part(radicand)
        if core == 1:
            return cls(Fraction(p + s * k, r), 0, _default_d(radicand))
        return cls(Fraction(p, r), Fraction(s * k, r), core)

    @staticmethod
    def zeta(n):
        """Primitive n-th root of unity exp(2*pi*i/n) for n in {2, 3, 4, 6}."""
        if n == 3:
            return QuadExt(Fraction(-1, 2), Fraction(1, 2), -3)
        if n == 6:
            return QuadExt(Fraction(1, 2), Fraction(1, 2), -3)
        if n == 4:
            return QuadExt(0, 1, -1)
        if n == 2:
            return QuadExt(-1, 0, -3)
        raise ValueError(f"no quadratic root of unity of order {n}")

    # -- coercion -----------------------------------------------------

    def _binary(self, other, op):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                if other.b == 0:
                    other = QuadExt(other.a, 0, self.d)
                elif self.b == 0:
                    return op(QuadExt(self.a, 0, other.d), other)
                else:
                    raise FieldMismatchError(
                        f"cannot combine Q(sqrt({self.d})) with Q(sqrt({other.d}))"
                    )
            return op(self, other)
        if isinstance(other, (int, Fraction)):
            return op(self, QuadExt(other, 0, self.d))
        return NotImplemented

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        return self._binary(other, lambda x, y: QuadExt(x.a + y.a, x.b + y.b, x.d))

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda x, y: QuadExt(x.a - y.a, x.b - y.b, x.d))

    def __rsub__(self, other):
        return self._binary(other, lambda x, y: QuadExt(y.a - x.a, y.b - x.b, x.d))

    def __mul__(self, other):
        return self._binary(
            other, lambda x, y: QuadExt(x.a * y.a + x.d * x.b * y.b, x.a * y.b + x.b * y.a, x.d)
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binary(other, lambda x, y: x * y.inverse())

    def __rtruediv__(self, other):
        return self._binary(other, lambda x, y: y * x.inverse())

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadExt(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        return QuadExt(self.a, -self.b, self.d)

    def norm(self):
        return self.a * self.a - self.d * self.b * self.b

    def trace(self):
        return 2 * self.a

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return QuadExt(self.a / n, -self.b / n, self.d)

    # -- predicates ---------------------------------------------------

    def is_rational(self):
        return self.b == 0

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def sign(self):
        """Exact sign of the real embedding (``d > 0``, positive root)."""
        if self.d < 0:
            if self.b != 0:
                raise ValueError("element is not real")
            return (self.a > 0) - (self.a < 0)
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with d*b^2
        diff = self.a * self.a - self.d * self.b * self.b
        if diff == 0:
            return 0
        return sa if diff > 0 else sb

    # -- text ---------------------------------------------------------

    def __repr__(self):
        return f"QuadExt({format_rational(self.a)}, {format_rational(self.b)}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return format_rational(self.a)
        root = f"sqrt({self.d})"
        if self.b == 1:
            surd = root
        elif self.b == -1:
            surd = "-" + root
        else:
            surd = f"{format_rational(self.b)}*{root}"
        if self.a == 0:
            return surd
        if surd.startswith("-"):
            return f"{format_rational(self.a)} - {surd[1:]}"
        return f"{format_rational(self.a)} + {surd}"

    def to_json(self):
        return {"a": format_rational(self.a), "b": format_rational(self.b), "d": self.d}

    @classmethod
    def parse(cls, text):
        """Parse ``"a b d"`` (rational tokens ``p/q``) meaning ``a + b*sqrt(d)``."""
        parts = text.split()
        if len(parts) != 3:
            raise ValueError(f"expected 'a b d', got {text!r}")
        return cls(parse_rational(parts[0]), parse_rational(parts[1]), int(parts[2]))


def _default_d(radicand):
    # a perfect-square radicand gives a rational value; any legal d will do
    return -1 if radicand < 0 else 2
