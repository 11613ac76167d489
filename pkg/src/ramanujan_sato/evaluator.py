"""Verified summation of sum A_n (B n + C) x0^n against an independent 1/pi."""

import math
from dataclasses import dataclass, field

from mpmath.libmp import from_int, mpf_cmp, mpf_div, mpf_shift, round_ceiling, to_float

from .constants import compute_BC
from .numerics import Ball, ref_pi
from .numerics.ball import RAD_PREC, _log10
from .odeops import a_n_stream, derive_recurrence

TERM_CAP = 5000
RATIO_LIMIT = 0.95
RATIO_WINDOW = 5


class SummationError(ArithmeticError):
    pass


@dataclass(frozen=True)
class SummationReport:
    label: str
    terms_used: int
    partial_sum: Ball
    pi_inverse_ref: Ball
    digits_agreed: int
    per_term_rate: float
    target_digits: int
    checkpoints: tuple = field(default=())

    @property
    def passed(self):
        return self.digits_agreed >= self.target_digits

    def to_json(self):
        return {
            "label": self.label,
            "terms_used": self.terms_used,
            "partial_sum": self.partial_sum.to_json(),
            "pi_inverse_ref": self.pi_inverse_ref.to_json(),
            "digits_agreed": self.digits_agreed,
            "per_term_rate": round(self.per_term_rate, 6),
            "target_digits": self.target_digits,
            "passed": self.passed,
        }


def working_precision(target_digits):
    return int(math.ceil(3.4 * target_digits)) + 64


def _log10_abs(b):
    m = b.abs_upper()
    if not m[1]:
        return -math.inf
    return _log10(m)


def sum_series(g, target_digits=30, cap=TERM_CAP, constants=None):
    """Sum until the term and a geometric tail estimate drop below 10**-(target+3)."""
    if target_digits < 5:
        raise ValueError("target_digits must be at least 5")
    prec = working_precision(target_digits)
    sc = compute_BC(g, prec) if constants is None else constants
    B, C, x0 = sc.B, sc.C, sc.x0_ball
    rec = derive_recurrence(g.w, g.R).with_initials(g.expected_initials or [1])
    stop = -(target_digits + 3)
    total = Ball.exact(0, prec)
    xn = Ball.exact(1, prec)
    logs = []
    checkpoints = []
    n = 0
    for n, a in enumerate(a_n_stream(rec)):
        if n >= cap:
            raise SummationError(f"{g.label}: no convergence within {cap} terms")
        term = Ball.exact(a, prec) * (B * n + C) * xn
        total = total + term
        xn = xn * x0
        lt = _log10_abs(term)
        logs.append(lt)
        if n and n % 50 == 0:
            checkpoints.append((n, total))
        if len(logs) > RATIO_WINDOW and all(math.isfinite(v) for v in logs[-RATIO_WINDOW - 1:]):
            ratios = [logs[-k] - logs[-k - 1] for k in range(1, RATIO_WINDOW + 1)]
            r = max(ratios)
            if n > 200 and r >= math.log10(RATIO_LIMIT):
                if all(v > stop for v in logs[-RATIO_WINDOW:]):
                    raise SummationError(f"{g.label}: term ratio {10 ** r:.3f} >= {RATIO_LIMIT}: non-convergent or precision starvation")
            if r < math.log10(RATIO_LIMIT):
                tail = lt + r - math.log10(1 - 10 ** r)
                if lt < stop and tail < stop:
                    break
    terms_used = n + 1
    pi = ref_pi(prec + 16)
    inv_pi = Ball.exact(1, prec + 16) / pi
    digits = total.agreement_digits(inv_pi)
    rate = -logs[-1] / terms_used if logs and math.isfinite(logs[-1]) else 0.0
    checkpoints = tuple((k, s.agreement_digits(inv_pi)) for k, s in checkpoints) + ((terms_used, digits),)
    return SummationReport(g.label, terms_used, total, inv_pi, digits, rate, target_digits, checkpoints)


def verify_all(target_digits=30, groups=None):
    """sum_series for every group; failures are collected, not raised."""
    if groups is None:
        from .registry import load_builtin

        groups = load_builtin()
    reports, errors = [], []
    for g in groups:
        try:
            reports.append(sum_series(g, target_digits))
        except (ArithmeticError, ValueError) as exc:
            errors.append((g.label, str(exc)))
    return reports, errors
