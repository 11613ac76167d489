"""Eta quotients: products of scaled Dedekind eta functions and their q-expansions."""

from dataclasses import dataclass
from fractions import Fraction

from .series import QSeries


@dataclass(frozen=True)
class EtaQuotientSpec:
    """``(prod eta(a*tau)**e) ** outer_power`` with ``factors = ((a, e), ...)``."""

    factors: tuple = ()
    outer_power: int = 1

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((int(a), int(e)) for a, e in self.factors))
        for a, _ in self.factors:
            if a < 1:
                raise ValueError(f"eta scale must be a positive integer, got {a}")

    @property
    def lead_exp(self):
        """Leading exponent ``outer_power * sum(a*e) / 24``."""
        return Fraction(sum(a * e for a, e in self.factors) * self.outer_power, 24)

    def inverse(self):
        return EtaQuotientSpec(self.factors, -self.outer_power)

    def exponent_map(self):
        """``{a: total exponent of eta(a*tau)}`` with the outer power folded in."""
        out = {}
        for a, e in self.factors:
            out[a] = out.get(a, 0) + e * self.outer_power
        return {a: e for a, e in out.items() if e}

    def format(self):
        num = [f"η{a}" + (f"^{e}" if e != 1 else "") for a, e in self.factors if e > 0]
        den = [f"η{a}" + (f"^{-e}" if e != -1 else "") for a, e in self.factors if e < 0]
        body = "·".join(num) or "1"
        if den:
            body = f"({body})/({'·'.join(den)})"
        if self.outer_power != 1:
            body = f"({body})^{self.outer_power}"
        return body


def eta_product_coeffs(exponents, order):
    """Coefficients of ``prod_a prod_{k>=1} (1 - q**(a*k)) ** exponents[a]`` below q**order.

    Uses the logarithmic derivative: if F = prod_k (1 - q^k)^(b_k) then
    n f_n = sum_{j=1..n} g_j f_{n-j} with g_j = -sum_{k | j} k b_k.  All
    divisions by n are exact because F has integer coefficients.
    """
    b = [0] * order
    for a, e in exponents.items():
        for k in range(a, order, a):
            b[k] += e
    g = [0] * order
    for k in range(1, order):
        if b[k]:
            for j in range(k, order, k):
                g[j] -= k * b[k]
    f = [0] * order
    if order:
        f[0] = 1
    for n in range(1, order):
        acc = 0
        for j in range(1, n + 1):
            if g[j]:
                acc += g[j] * f[n - j]
        f[n] = acc // n
    return f


def eta_quotient(spec, order=64):
    """q-expansion of the eta quotient with ``order`` coefficients past the leading term."""
    if order < 1:
        raise ValueError("order must be at least 1")
    lead = spec.lead_exp
    # integral lead exponents stay on the q grid; otherwise keep the q**(1/24)-offset lead
    coeffs = eta_product_coeffs(spec.exponent_map(), order)
    return QSeries(coeffs, lead, 1)
