"""CM values x(tau0), implicit derivatives on the diagonal, W = sqrt(w(x0)), and the constants B, C.

For a CM point tau0 with gamma*tau0 = A*tau0 and M = gamma^-1 A = (a' b'; c' d'):

    B = W (1 - y1) (c' tau0 + d') / (i c')
    C = B (1 + x0 W'/W + x0 y2 / (y1 (1 - y1)))

where y1, y2 are the first two derivatives of the branch y(x) of Psi(x, y) = 0
through (x0, x0) and W' = dW/dx at x0.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath.libmp import from_int, mpf_cmp, mpf_shift

from .modeq import diagonal_roots, find_modular_equation
from .numerics import Ball, BallComplex, QuadExt, quad_eval, quad_eval_complex, ref_pi
from .numerics.ball import DEFAULT_PREC, _exact_fraction
from .registry.radical import eval_radical


class ConstantsError(ArithmeticError):
    pass


class CMError(ConstantsError):
    pass


@dataclass(frozen=True)
class SeriesConstants:
    label: str
    x0_exact: QuadExt
    x0_ball: Ball
    y1: QuadExt
    y2: QuadExt
    W: Ball
    dW: Ball
    B: Ball
    C: Ball

    def to_json(self):
        return {
            "label": self.label,
            "x0": {"exact": str(self.x0_exact), "ball": self.x0_ball.to_json()},
            "y1": str(self.y1),
            "y2": str(self.y2),
            "W": self.W.to_json(),
            "dW": self.dW.to_json(),
            "B": self.B.to_json(),
            "C": self.C.to_json(),
        }


@dataclass(frozen=True)
class FixedPointReport:
    M: tuple
    det_M: Fraction
    det_gamma: int
    c_prime: Fraction
    d_prime: Fraction
    printed_M_mismatches: tuple


def verify_fixed_point(cm, n):
    """Exact checks of gamma tau0 = A tau0, M = gamma^-1 A, det M = n / det gamma and c' != 0."""
    alpha, beta, zero, delta = cm.A
    if zero != 0:
        raise CMError("A[1][0] must be 0 (A upper triangular)")
    if alpha * delta != n:
        raise CMError(f"det A = {alpha * delta}, expected n = {n}")
    det_g = cm.det_gamma
    if det_g <= 0:
        raise CMError(f"det gamma = {det_g} must be positive")
    a, b, c, d = cm.gamma
    t = cm.tau0
    lhs = (t * a + b) * delta
    rhs = (t * alpha + beta) * (t * c + d)
    if lhs != rhs:
        raise CMError(f"gamma*tau0 != A*tau0: delta*(a tau0 + b) = {lhs} but (alpha tau0 + beta)(c tau0 + d) = {rhs}")
    M = cm.M
    # gamma M = A entrywise
    prod = (a * M[0] + b * M[2], a * M[1] + b * M[3], c * M[0] + d * M[2], c * M[1] + d * M[3])
    for name, got, want in zip(("a'", "b'", "c'", "d'"), prod, cm.A):
        if got != want:
            raise CMError(f"gamma*M differs from A in the entry for {name}")
    det_M = M[0] * M[3] - M[1] * M[2]
    if det_M != Fraction(n, det_g):
        raise CMError(f"det M = {det_M}, expected n/det(gamma) = {Fraction(n, det_g)}")
    if M[2] == 0:
        raise CMError("c' = 0")
    # M fixes tau0: c' tau0^2 + (d' - a') tau0 - b' = 0
    if t * t * M[2] + t * (M[3] - M[0]) - M[1] != 0:
        raise CMError("M tau0 != tau0")
    return FixedPointReport(M, det_M, det_g, M[2], M[3], tuple(cm.printed_M_mismatches()))


@lru_cache(maxsize=None)
def _psi_for(g):
    return find_modular_equation(g)


def modular_equation(g):
    """The discovered modular equation (cached per record)."""
    return _psi_for(g)


def q0_ball(cm, prec=DEFAULT_PREC):
    """q0 = exp(2 pi i tau0) with tau0 = (p + sqrt(d))/r, d < 0."""
    p, d, r = cm.tau0_form
    two_pi = ref_pi(prec + 16) * 2
    t = quad_eval_complex(cm.tau0, prec + 16)
    # 2 pi i tau0 = -2 pi Im(tau0) + 2 pi i Re(tau0)
    z = BallComplex(-(two_pi * t.im), two_pi * t.re)
    return z.exp()


def eta_value(g, prec=DEFAULT_PREC):
    """x(tau0) as a complex ball: truncated eta products with a rigorous tail bound."""
    spec = g.x_spec
    lead = spec.lead_exp
    if lead.denominator != 1:
        raise ConstantsError("x must have an integral leading exponent")
    work = prec + 32
    q = q0_ball(g.cm, work)
    u = _exact_fraction(q.abs_upper())
    if u >= Fraction(1, 2):
        raise ConstantsError(f"|q0| <= {float(u):.3g} is too large for the product evaluation")
    target = Fraction(1, 2 ** (work + 8))
    total_tail = Fraction(0)
    value = q ** int(lead)
    for a, e in spec.exponent_map().items():
        qa = q ** a
        ua = u ** a
        prod = BallComplex.exact(1, work)
        term = BallComplex.exact(1, work)
        power = Fraction(1)
        k = 0
        while True:
            k += 1
            term = term * qa
            prod = prod * (1 - term)
            power *= ua
            # |log prod_{j>k} (1 - q^(a j))| <= sum_{j>k} u^(a j)/(1 - u^(a j)) <= u^(a(k+1)) / (1 - u^a)^2
            tail = power * ua / (1 - ua) ** 2
            if tail < target:
                break
        total_tail += abs(e) * tail
        value = value * (prod ** e)
    # |exp(s) - 1| <= 2|s| for |s| <= 1
    err = 2 * total_tail * _exact_fraction(value.abs_upper())
    value = value.inflate(err)
    return BallComplex(value.re.with_prec(prec), value.im.with_prec(prec))


def select_x0(g, prec=DEFAULT_PREC, psi=None, escalations=4):
    """The exact diagonal root of Psi equal to x(tau0), with its numeric enclosure."""
    psi = modular_equation(g) if psi is None else psi
    roots = [r for r, _ in diagonal_roots(psi)]
    for _ in range(escalations + 1):
        xv = eta_value(g, prec)
        if not xv.im.contains_zero():
            raise ConstantsError(f"{g.label}: x(tau0) is not real: {xv}")
        hits = []
        for r in roots:
            if isinstance(r, QuadExt) and r.d < 0:
                continue
            rb = quad_eval(r if isinstance(r, QuadExt) else QuadExt(r, 0, 2), prec)
            if rb.overlaps(xv.re):
                hits.append((r, rb))
        if len(hits) == 1:
            r, rb = hits[0]
            exact = r if isinstance(r, QuadExt) else QuadExt(r, 0, 2)
            return exact, rb
        if not hits:
            raise ConstantsError(f"{g.label}: no root of Psi(X,X) matches x(tau0) ~ {xv.re}")
        prec *= 2
    raise ConstantsError(f"{g.label}: several roots match x(tau0) ~ {xv.re}")


def implicit_derivatives(psi, x0):
    """(y1, y2) for the branch y(x) of Psi(x, y) = 0 through (x0, x0), exactly."""
    py = psi.partial(0, 1)(x0, x0)
    if py == 0:
        raise ConstantsError("singular diagonal point: Psi_Y(x0, x0) = 0")
    px = psi.partial(1, 0)(x0, x0)
    pxx = psi.partial(2, 0)(x0, x0)
    pxy = psi.partial(1, 1)(x0, x0)
    pyy = psi.partial(0, 2)(x0, x0)
    y1 = -px / py
    y2 = -(pxx + pxy * y1 * 2 + pyy * y1 * y1) / py
    return _as_quad(y1, x0), _as_quad(y2, x0)


def _as_quad(v, like):
    if isinstance(v, QuadExt):
        return v
    return QuadExt(v, 0, like.d if isinstance(like, QuadExt) else 2)


def compute_W(g, x0, prec=DEFAULT_PREC):
    """W = sqrt(w(x0)) (positive branch) and dW/dx = w'(x0) / (2W)."""
    wx = _as_quad(g.w(x0), x0)
    if wx.sign() <= 0:
        raise ConstantsError(f"{g.label}: w(x0) = {wx} is not positive")
    W = quad_eval(wx, prec).sqrt("w(x0)")
    dW = quad_eval(_as_quad(g.w.derivative()(x0), x0), prec) / (W * 2)
    return W, dW


def cm_factor(cm, prec=DEFAULT_PREC):
    """(c' tau0 + d') / (i c') as a complex ball."""
    c1, d1 = cm.c_prime, cm.d_prime
    t = quad_eval_complex(cm.tau0, prec)
    num = t * Ball.exact(c1, prec) + Ball.exact(d1, prec)
    return num / BallComplex(Ball.exact(0, prec), Ball.exact(c1, prec))


def _real_part(z, name, prec):
    if not z.im.contains_zero():
        raise ConstantsError(f"{name} has a nonzero imaginary part {z.im} (sign or branch error)")
    limit = mpf_shift(from_int(1), 8 - prec)
    if mpf_cmp(z.im.abs_upper(), limit) > 0:
        raise ConstantsError(f"imaginary enclosure of {name} is too wide: {z.im}")
    return z.re


def compute_BC(g, prec=DEFAULT_PREC):
    verify_fixed_point(g.cm, g.meq_n)
    psi = modular_equation(g)
    x0, x0_ball = select_x0(g, prec, psi)
    if not psi.diagonal()(x0) == 0:
        raise ConstantsError(f"{g.label}: Psi(x0, x0) != 0")
    if mpf_cmp(x0_ball.abs_upper(), from_int(1)) >= 0:
        raise ConstantsError(f"{g.label}: |x0| >= 1, the series cannot converge")
    y1, y2 = implicit_derivatives(psi, x0)
    W, dW = compute_W(g, x0, prec)
    one_minus_y1 = quad_eval(1 - y1, prec)
    Bc = cm_factor(g.cm, prec) * (W * one_minus_y1)
    B = _real_part(Bc, "B", prec)
    y1b = quad_eval(y1, prec)
    y2b = quad_eval(y2, prec)
    factor = 1 + x0_ball * dW / W + x0_ball * y2b / (y1b * one_minus_y1)
    C = _real_part(Bc * factor, "C", prec)
    return SeriesConstants(g.label, x0, x0_ball, y1, y2, W, dW, B, C)


@dataclass(frozen=True)
class TableComparison:
    name: str
    computed: Ball
    expected: Ball
    digits: int
    ok: bool


def compare_closed_forms(g, sc, tol_digits=25):
    """Compare computed B and C with the registry's closed forms."""
    out = []
    for name, computed, text in (("B", sc.B, g.expected_B), ("C", sc.C, g.expected_C)):
        if text is None:
            continue
        expected = eval_radical(text, computed.prec)
        digits = computed.agreement_digits(expected)
        out.append(TableComparison(name, computed, expected, digits, digits >= tol_digits))
    return out
