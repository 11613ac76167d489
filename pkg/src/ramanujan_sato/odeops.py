"""The weight-2 form z, the third-order equation it satisfies in x, and the A_n recurrence.

With theta = x d/dx, z(x) = sum A_n x^n satisfies

    2 w theta^3 z + 3 (theta w) theta^2 z + (theta^2 w - 2 R) theta z - (theta R) z = 0,

and comparing coefficients of x^n gives sum_j P_j(n) A_{n-j} = 0 with

    P_j(n) = w_j (2m^3 + 3 j m^2 + j^2 m) - r_j (2m + j),   m = n - j.
"""

from dataclasses import dataclass
from fractions import Fraction

from .numerics.rational import format_rational
from .qseries.poly import Poly
from .qseries.recognize import coefficients_in_x, express_in_x


class RecurrenceError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Recurrence:
    """sum_{j=0..J} P_j(n) A_{n-j} = 0 with ``terms[j] = P_j`` as polynomials in n."""

    terms: tuple
    initials: tuple = ()

    @property
    def span(self):
        return len(self.terms) - 1

    def with_initials(self, initials):
        return Recurrence(self.terms, tuple(Fraction(a) for a in initials))

    def rows(self):
        """[c0, c1, c2, c3] per term."""
        return [[p[k] for k in range(4)] for p in self.terms]

    def format(self):
        """Table-style layout: ``2n^3 A_n + (...)A_{n-1} + ... = 0``."""
        parts = []
        for j, p in enumerate(self.terms):
            body = p.format("n")
            idx = "n" if j == 0 else f"{{n-{j}}}"
            single = sum(1 for c in p.coeffs if c) == 1
            parts.append(f"{body} A_{idx}" if single else f"({body})A_{idx}")
        return " + ".join(parts) + " = 0"

    def to_json(self):
        return {
            "span": self.span,
            "terms": [[format_rational(c) for c in row] for row in self.rows()],
            "initials": [format_rational(a) for a in self.initials],
        }


def theta_q(s):
    return s.theta()


def x_derivative(f, x):
    """x df/dx on q-series by the chain rule: f_q * x / x_q."""
    return f.theta() * (x / x.theta())


def build_z(g, order=64):
    """z = (log x)_q / sqrt(w(x))."""
    if order < 8:
        raise ValueError("order must be at least 8")
    x = g.x_cached(order)
    return x.log_derivative() / g.w(x).sqrt()


def r_series(z):
    """(2 z z_qq - 3 z_q^2) / z^4 with subscripts meaning q d/dq."""
    zq = z.theta()
    zqq = zq.theta()
    return (z * zqq * 2 - zq * zq * 3) * (z ** 4).inverse()


def extract_R(g, order=64):
    """Recognise (2 z z_qq - 3 z_q^2)/z^4 as a polynomial in x."""
    maxdeg = max(16, g.R.degree)
    x = g.x_cached(order)
    return express_in_x(r_series(build_z(g, order)), x, maxdeg)


def ode_residual(g, order=48, w=None, R=None, z=None):
    """Left side of the third-order equation as a q-series; zero when (w, R) fit z."""
    w = g.w if w is None else w
    R = g.R if R is None else R
    x = g.x_cached(order)
    z = build_z(g, order) if z is None else z
    if z.is_zero():
        return z
    z1 = x_derivative(z, x)
    z2 = x_derivative(z1, x)
    z3 = x_derivative(z2, x)
    wt = w.theta()
    lhs = w(x) * z3 * 2 + wt(x) * z2 * 3 + (wt.theta() - R * 2)(x) * z1 - R.theta()(x) * z
    return lhs


def closed_form_term(wj, rj, j):
    """P_j(n) = wj (2m^3 + 3 j m^2 + j^2 m) - rj (2m + j) with m = n - j."""
    m = Poly([-j, 1])
    return (m ** 3 * 2 + m ** 2 * (3 * j) + m * (j * j)) * wj - (m * 2 + j) * rj


def _normalize(terms):
    lead = terms[0][3]
    if lead == 0 or any(terms[0][k] for k in range(3)):
        raise RecurrenceError(f"P_0 must be a nonzero multiple of n^3, got {terms[0].format('n')}")
    scale = Fraction(2) / Fraction(lead)
    return tuple(p.scale(scale) for p in terms)


def derive_recurrence(w, R):
    """Recurrence for the coefficients of z from w and R, scaled so that P_0 = 2n^3."""
    if w[0] != 1 or R[0] != 0:
        raise RecurrenceError("derive_recurrence needs w(0) = 1 and R(0) = 0")
    span = max(w.degree, R.degree)
    terms = [closed_form_term(w[j], R[j], j) for j in range(span + 1)]
    while len(terms) > 1 and not terms[-1]:
        terms.pop()
    return Recurrence(_normalize(terms))


def apply_operator(w, R, f):
    """The differential operator applied to a polynomial f(x)."""
    t1 = f.theta()
    t2 = t1.theta()
    t3 = t2.theta()
    wt = w.theta()
    return w * t3 * 2 + wt * t2 * 3 + (wt.theta() - R * 2) * t1 - R.theta() * f


def derive_recurrence_by_substitution(w, R):
    """Second derivation: apply the operator to x^m and interpolate each P_j from its values."""
    span = max(w.degree, R.degree)
    samples = {j: [] for j in range(span + 1)}
    for m in range(5):
        image = apply_operator(w, R, Poly.monomial(m))
        for j in range(span + 1):
            samples[j].append((m + j, image[m + j]))
    terms = []
    for j in range(span + 1):
        p = lagrange(samples[j][:4])
        n, v = samples[j][4]
        if p(n) != v:
            raise RecurrenceError(f"P_{j} is not cubic in n")
        terms.append(p)
    while len(terms) > 1 and not terms[-1]:
        terms.pop()
    return Recurrence(_normalize(terms))


def lagrange(points):
    """Interpolating polynomial through (n, value) pairs, exact."""
    total = Poly()
    for i, (ni, vi) in enumerate(points):
        basis = Poly([1])
        denom = Fraction(1)
        for k, (nk, _) in enumerate(points):
            if k != i:
                basis = basis * Poly([-nk, 1])
                denom *= ni - nk
        total = total + basis.scale(Fraction(vi) / denom)
    return total


def initial_coefficients(g, count, order=None):
    """A_0 .. A_{count-1} from z = sum A_n x^n by triangular elimination."""
    order = max(64, count + 16) if order is None else order
    x = g.x_cached(order)
    coeffs, _ = coefficients_in_x(build_z(g, order), x, count)
    return [Fraction(c) for c in coeffs]


def a_n_stream(rec):
    """A_0, A_1, ... : the stored initials, then the recurrence (A_k = 0 for k < 0)."""
    if not rec.initials:
        raise RecurrenceError("the recurrence needs at least A_0")
    terms = [tuple(Fraction(c) for c in p.coeffs) for p in rec.terms]
    history = []
    for a in rec.initials:
        a = Fraction(a)
        history.append(a)
        yield a
    n = len(history)
    span = rec.span
    while True:
        p0 = _eval(terms[0], n)
        if p0 == 0:
            raise RecurrenceError(f"P_0({n}) = 0; A_{n} is not determined")
        acc = 0
        for j in range(1, min(span, n) + 1):
            acc += _eval(terms[j], n) * history[n - j]
        a = -acc / p0
        history.append(a)
        if len(history) > span:
            history[n - span] = None
        yield a
        n += 1


def _eval(coeffs, n):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc
