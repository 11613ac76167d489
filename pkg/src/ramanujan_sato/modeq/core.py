"""Discovery and verification of modular equations, and roots on the diagonal."""

from fractions import Fraction

from ..numerics.quadratic import QuadExt
from ..numerics.rational import squarefree_part
from ..qseries.poly import Poly
from ..qseries.recognize import express_in_x
from ..qseries.series import QSeries, SeriesError
from .bareiss import nullspace
from .equation import ModularEquation, psi_degree


class ModularEquationError(ArithmeticError):
    pass


class GaloisStabilityError(ModularEquationError):
    """An elementary symmetric function kept an irrational coefficient."""


class UnsupportedFactorError(ModularEquationError):
    def __init__(self, factor):
        super().__init__(f"Psi(X,X) has an irreducible factor of degree {factor.degree} over Q: {factor.format('X')}")
        self.factor = factor


def _conjugate_x(g, order):
    """x(tau) known below q**(order + 1) and x(n tau)."""
    x = g.x_cached(order)
    return x, x.substitute_qn(g.meq_n)


def _monomial_table(x, y, deg, limit):
    """Integer coefficient vectors of x**i * y**j for q**0 .. q**(limit-1)."""
    xp = [QSeries.constant(1, limit + 1)]
    yp = [QSeries.constant(1, limit + 1)]
    for _ in range(deg):
        xp.append(xp[-1] * x)
        yp.append(yp[-1] * y)
    cols = {}
    for i in range(deg + 1):
        for j in range(deg + 1):
            s = (xp[i] * yp[j]).truncate(limit)
            if s.precision < limit:
                raise SeriesError(f"x^{i} y^{j} known only below q^{s.precision}")
            cols[i, j] = s.integer_coeffs(0, limit)
    return cols


def find_modular_equation(g, order=96, retries=2):
    """Integer Psi with Psi(x(tau), x(n tau)) = O(q**order), from the exact kernel."""
    deg = psi_degree(g.meq_n)
    if order < (deg + 1) ** 2 + 16:
        raise ValueError(f"order must be at least {(deg + 1) ** 2 + 16} for psi degree {deg}")
    for attempt in range(retries + 1):
        x, y = _conjugate_x(g, order)
        cols = _monomial_table(x, y, deg, order)
        keys = sorted(cols)
        rows = [[cols[k][e] for k in keys] for e in range(order)]
        basis = nullspace(rows)
        if len(basis) == 1:
            break
        if not basis:
            raise ModularEquationError(f"{g.label}: no relation of degree {deg} through q^{order} (order too low or degree wrong)")
        order *= 2
    else:
        raise ModularEquationError(f"{g.label}: kernel dimension {len(basis)} persists at order {order // 2}")
    v = basis[0]
    c = [[0] * (deg + 1) for _ in range(deg + 1)]
    for (i, j), val in zip(keys, v):
        c[i][j] = val
    if c[0][deg] < 0:
        c = [[-val for val in r] for r in c]
    psi = ModularEquation(g.meq_n, c)
    if not psi.is_symmetric():
        raise ModularEquationError(f"{g.label}: kernel vector is not symmetric: {psi.format()}")
    if psi.coeffs[0][deg] != 1:
        raise ModularEquationError(f"{g.label}: Y^{deg} coefficient is {psi.coeffs[0][deg]}, not 1")
    return psi


def verify_annihilation(psi, g, order=60):
    """Psi(x(tau), x(n tau)) truncated below q**order; zero when the equation holds."""
    x, y = _conjugate_x(g, order + 1)
    return psi(x, y).truncate(order)


def conjugates(g, order):
    """x(n tau) and x((tau + beta)/n) for beta = 0 .. n-1."""
    n = g.meq_n
    if n not in (2, 3):
        raise NotImplementedError("the symmetric-function path supports n in {2, 3}")
    x = g.x_cached(order)
    return [x.substitute_qn(n)] + [x.substitute_root(n, beta) for beta in range(n)]


def elementary_symmetric(series):
    """e_1 .. e_k of a list of series."""
    # coefficients of prod (1 + r_i T), built one factor at a time
    prec = min(s.precision for s in series)
    one = QSeries.constant(1, int(prec) + 1)
    e = [one]
    for r in series:
        new = [e[0]]
        for k in range(1, len(e) + 1):
            term = e[k - 1] * r
            new.append(term if k == len(e) else e[k] + term)
        e = new
    return e[1:]


def symmetric_function_check(g, order=96):
    """[(P_k, residual_k)] with e_k(conjugates) = P_k(x); residuals vanish when P_k is exact."""
    deg = psi_degree(g.meq_n)
    x = g.x_cached(order)
    out = []
    for k, e in enumerate(elementary_symmetric(conjugates(g, order)), 1):
        try:
            e = e.rational_part()
        except SeriesError as exc:
            raise GaloisStabilityError(f"{g.label}: e_{k} is not rational: {exc}") from None
        guard = int(e.precision) - deg - 1
        p = express_in_x(e, x, deg, guard=min(8, guard))
        residual = e - p(x)
        out.append((p, residual))
    return out


def psi_from_symmetric(polys, n):
    """Psi(X, Y) = prod (Y - r_i) = sum_k (-1)^k e_k(X) Y^(deg-k)."""
    deg = len(polys)
    rows = {deg: [1]}
    for k, p in enumerate(polys, 1):
        sign = -1 if k % 2 else 1
        rows[deg - k] = [sign * c for c in p.coeffs] or [0]
    return ModularEquation.from_rows(n, rows)


def diagonal_roots(psi):
    """Roots of Psi(X, X) = 0 as ``(root, multiplicity)`` with root a Fraction or QuadExt.

    Psi(X, X) is factored over Q with sympy; factors of degree above 2 are
    rejected.
    """
    import sympy

    diag = psi.diagonal()
    if not diag:
        raise ValueError("Psi(X, X) is identically zero")
    X = sympy.Symbol("X")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * X**k for k, c in enumerate(map(Fraction, diag.coeffs)))
    _, factors = sympy.factor_list(expr, X)
    roots = []
    for f, mult in factors:
        coeffs = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in reversed(sympy.Poly(f, X).all_coeffs())]
        p = Poly(coeffs)
        if p.degree == 1:
            roots.append((-p[0] / Fraction(p[1]), mult))
        elif p.degree == 2:
            for r in _quadratic_roots(p):
                roots.append((r, mult))
        elif p.degree > 2:
            raise UnsupportedFactorError(p)
    return sorted(roots, key=lambda rm: _sort_key(rm[0]))


def _quadratic_roots(p):
    c, b, a = (Fraction(v) for v in (p[0], p[1], p[2]))
    disc = b * b - 4 * a * c
    # disc = num/den; sqrt(disc) = sqrt(num*den)/den
    s, core = squarefree_part(disc.numerator * disc.denominator)
    scale = Fraction(s, disc.denominator)
    return [QuadExt(-b / (2 * a), sign * scale / (2 * a), core) for sign in (1, -1)]


def _sort_key(r):
    if isinstance(r, QuadExt):
        return (1, r.d, float(r.a), float(r.b))
    return (0, 0, float(r), 0)


def root_matches(psi, x0):
    """True when Psi(x0, x0) vanishes exactly."""
    value = psi.diagonal()(x0)
    return value == 0
