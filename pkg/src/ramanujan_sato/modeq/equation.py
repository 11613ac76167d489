"""Bivariate modular equations Psi(X, Y) with integer coefficients."""

from fractions import Fraction
from math import gcd

from ..qseries.poly import Poly

MINUS = "−"


def psi_degree(n):
    """n * prod_{p | n} (1 + 1/p)."""
    if n < 2:
        raise ValueError("psi_degree needs n >= 2")
    result = Fraction(n)
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            result *= Fraction(p + 1, p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result *= Fraction(m + 1, m)
    return int(result)


class ModularEquation:
    """``sum c[i][j] X**i Y**j``; ``coeffs[i][j]`` holds the X**i Y**j coefficient."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        self.n = n
        size = max(len(coeffs), max((len(r) for r in coeffs), default=0))
        self.coeffs = tuple(
            tuple(_int(coeffs[i][j]) if i < len(coeffs) and j < len(coeffs[i]) else 0 for j in range(size))
            for i in range(size)
        )

    @classmethod
    def from_rows(cls, n, rows):
        """Build from ``{j: [X-coefficients of Y**j, constant first]}``."""
        size = max(max(rows) + 1, max(len(r) for r in rows.values()))
        c = [[0] * size for _ in range(size)]
        for j, xs in rows.items():
            for i, v in enumerate(xs):
                c[i][j] = v
        return cls(n, c)

    @property
    def psi_n_degree(self):
        return psi_degree(self.n)

    @property
    def size(self):
        return len(self.coeffs)

    def degree_x(self):
        return max((i for i, r in enumerate(self.coeffs) if any(r)), default=-1)

    def degree_y(self):
        return max((j for r in self.coeffs for j, v in enumerate(r) if v), default=-1)

    def is_symmetric(self):
        c = self.coeffs
        return all(c[i][j] == c[j][i] for i in range(self.size) for j in range(i))

    def content(self):
        g = 0
        for row in self.coeffs:
            for v in row:
                g = gcd(g, v)
        return g

    def row(self, j):
        """Coefficient of Y**j as a polynomial in X."""
        return Poly(r[j] for r in self.coeffs)

    def __call__(self, x, y):
        """Evaluate at ring elements (Fractions, QuadExt, series, balls)."""
        total = None
        ypow = None
        for j in range(self.size):
            ypow = 1 if j == 0 else (y if j == 1 else ypow * y)
            p = self.row(j)
            if not p:
                continue
            term = p(x) * ypow if j else p(x)
            total = term if total is None else total + term
        return 0 if total is None else total

    def partial(self, dx=0, dy=0):
        """Partial derivative d^(dx+dy)/dX^dx dY^dy as another equation (same n)."""
        size = self.size
        out = [[0] * size for _ in range(size)]
        for i in range(dx, size):
            for j in range(dy, size):
                v = self.coeffs[i][j]
                if v:
                    out[i - dx][j - dy] = v * _falling(i, dx) * _falling(j, dy)
        return ModularEquation(self.n, out)

    def diagonal(self):
        """Psi(X, X) as a polynomial."""
        out = [0] * (2 * self.size)
        for i, row in enumerate(self.coeffs):
            for j, v in enumerate(row):
                out[i + j] += v
        return Poly(out)

    def __eq__(self, other):
        if not isinstance(other, ModularEquation):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        get = lambda m, i, j: m[i][j] if i < len(m) and j < len(m) else 0
        return self.n == other.n and all(get(a, i, j) == get(b, i, j) for i in range(size) for j in range(size))

    def __hash__(self):
        return hash((self.n, tuple(tuple(v for v in r) for r in self.coeffs)))

    def format(self):
        """Collected by descending powers of Y, e.g. ``Y^3 + (2X − X^2)Y^2 + ...``."""
        terms = []
        for j in range(self.size - 1, -1, -1):
            p = self.row(j)
            if not p:
                continue
            nonzero = [(i, c) for i, c in enumerate(p.coeffs) if c]
            ymono = "" if j == 0 else ("Y" if j == 1 else f"Y^{j}")
            if len(nonzero) == 1:
                i, c = nonzero[0]
                xmono = _xmono(i)
                mono = xmono + ymono
                if not mono:
                    terms.append((c < 0, str(abs(c))))
                else:
                    terms.append((c < 0, ("" if abs(c) == 1 else str(abs(c))) + mono))
            else:
                terms.append((False, f"({_xpoly(nonzero)}){ymono}"))
        if not terms:
            return "0"
        out = (MINUS if terms[0][0] else "") + terms[0][1]
        for neg, body in terms[1:]:
            out += f" {MINUS} " if neg else " + "
            out += body
        return out

    __str__ = format

    def __repr__(self):
        return f"ModularEquation(n={self.n}, {self.format()})"

    def to_json(self):
        return {"n": self.n, "psi_degree": self.psi_n_degree, "coeffs": [list(r) for r in self.coeffs]}


def _xmono(i):
    return "" if i == 0 else ("X" if i == 1 else f"X^{i}")


def _xpoly(nonzero):
    parts = []
    for k, (i, c) in enumerate(nonzero):
        mag = abs(c)
        mono = _xmono(i)
        body = str(mag) if not mono else ("" if mag == 1 else str(mag)) + mono
        if k == 0:
            parts.append((MINUS if c < 0 else "") + body)
        else:
            parts.append((f" {MINUS} " if c < 0 else " + ") + body)
    return "".join(parts)


def _falling(k, m):
    out = 1
    for t in range(m):
        out *= k - t
    return out


def _int(v):
    v = Fraction(v)
    if v.denominator != 1:
        raise ValueError(f"modular equation coefficients must be integers, got {v}")
    return v.numerator
