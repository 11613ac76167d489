"""Group records: Hauptmodul data, CM data and expected values for one moonshine group."""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd

from ..modeq.equation import ModularEquation, psi_degree
from ..numerics.quadratic import QuadExt
from ..qseries.eta import EtaQuotientSpec, eta_quotient
from ..qseries.poly import Poly


class RegistryError(ValueError):
    """A record failed validation; names the group label and the offending field."""

    def __init__(self, label, field_name, message):
        super().__init__(f"{label}: {field_name}: {message}")
        self.label = label
        self.field = field_name


@dataclass(frozen=True)
class CMData:
    """tau0 = (p + sqrt(d))/r with gamma*tau0 = A*tau0 and M = gamma^-1 A."""

    tau0_form: tuple
    gamma: tuple
    A: tuple
    M_printed: tuple = None

    @property
    def tau0(self):
        p, d, r = self.tau0_form
        return QuadExt.from_surd(p, 1, d, r)

    @property
    def det_gamma(self):
        a, b, c, d = self.gamma
        return a * d - b * c

    @property
    def det_A(self):
        alpha, beta, zero, delta = self.A
        return alpha * delta - beta * zero

    @property
    def M(self):
        """gamma^-1 A as a tuple (a', b', c', d') of Fractions."""
        a, b, c, d = self.gamma
        alpha, beta, zero, delta = self.A
        det = Fraction(self.det_gamma)
        # adj(gamma) = (d -b; -c a)
        return (
            (d * alpha - b * zero) / det,
            (d * beta - b * delta) / det,
            (-c * alpha + a * zero) / det,
            (-c * beta + a * delta) / det,
        )

    @property
    def c_prime(self):
        return self.M[2]

    @property
    def d_prime(self):
        return self.M[3]

    def fixed_point_residual(self):
        """delta*(a tau + b) - (alpha tau + beta)*(c tau + d), exactly; zero iff gamma tau0 = A tau0."""
        a, b, c, d = self.gamma
        alpha, beta, _, delta = self.A
        t = self.tau0
        return (t * a + b) * delta - (t * alpha + beta) * (t * c + d)

    def printed_M_mismatches(self):
        """Entries of the stored printed M that differ from gamma^-1 A."""
        if self.M_printed is None:
            return []
        names = ("a'", "b'", "c'", "d'")
        return [
            (names[k], Fraction(self.M_printed[k]), self.M[k])
            for k in range(4)
            if Fraction(self.M_printed[k]) != self.M[k]
        ]

    def format_tau0(self):
        p, d, r = self.tau0_form
        return f"({p} + sqrt({d}))/{r}"


@dataclass(frozen=True, eq=False)
class GroupRecord:
    label: str
    level: int
    eta_spec: EtaQuotientSpec
    w: Poly
    R: Poly
    meq_n: int
    expected_psi: ModularEquation = None
    expected_recurrence: tuple = None
    expected_initials: tuple = ()
    cm: CMData = None
    expected_B: str = None
    expected_C: str = None
    expected_x0: QuadExt = None
    notes: dict = field(default_factory=dict)

    @property
    def x_spec(self):
        """Eta quotient for x = 1/t."""
        return self.eta_spec.inverse()

    def x_series(self, order=64):
        return eta_quotient(self.x_spec, order)

    @cached_property
    def _x_cache(self):
        return {}

    def x_cached(self, order):
        cache = self._x_cache
        if order not in cache:
            cache[order] = self.x_series(order)
        return cache[order]

    def key(self):
        """Tuple of every field, for equality in round-trip tests."""
        return (
            self.label,
            self.level,
            self.eta_spec.exponent_map(),
            self.w,
            self.R,
            self.meq_n,
            self.expected_psi,
            None if self.expected_recurrence is None else tuple(self.expected_recurrence),
            tuple(self.expected_initials),
            None if self.cm is None else (self.cm.tau0_form, self.cm.gamma, self.cm.A),
            self.expected_B,
            self.expected_C,
            self.expected_x0,
        )

    def validate(self):
        label = self.label
        if gcd(self.meq_n, self.level) != 1:
            raise RegistryError(label, "meq_n", f"gcd(n={self.meq_n}, N={self.level}) must be 1")
        if self.meq_n < 2:
            raise RegistryError(label, "meq_n", "n must be at least 2")
        if self.w[0] != 1:
            raise RegistryError(label, "w", f"w(0) must be 1, got {self.w[0]}")
        if self.R[0] != 0:
            raise RegistryError(label, "R", f"R(0) must be 0, got {self.R[0]}")
        lead = self.eta_spec.lead_exp
        if lead.denominator != 1:
            raise RegistryError(label, "eta", f"leading exponent {lead} of t is not an integer")
        x = self.x_series(4)
        if x.lead != 1 or x.coeffs[0] != 1:
            raise RegistryError(label, "eta", f"x = 1/t must be q + O(q^2), got {x.format(3)}")
        psi = self.expected_psi
        if psi is not None:
            deg = psi_degree(self.meq_n)
            if psi.n != self.meq_n or psi.degree_x() != deg or psi.degree_y() != deg:
                raise RegistryError(label, "psi", f"expected degree {deg} in X and Y for n={self.meq_n}")
        if self.expected_recurrence is not None:
            p0 = self.expected_recurrence[0]
            if p0 != Poly([0, 0, 0, 2]):
                raise RegistryError(label, "recurrence", f"P_0 must be 2n^3, got {p0.format('n')}")
        if self.cm is not None:
            validate_cm(label, self.cm, self.meq_n)
        return self


def validate_cm(label, cm, n):
    p, d, r = cm.tau0_form
    if d >= 0 or r == 0:
        raise RegistryError(label, "tau0", "tau0 must lie in the upper half plane (d < 0, r != 0)")
    if r < 0:
        raise RegistryError(label, "tau0", "write tau0 with a positive denominator r")
    alpha, beta, zero, delta = cm.A
    if zero != 0:
        raise RegistryError(label, "A", "A must be upper triangular")
    if cm.det_A != n:
        raise RegistryError(label, "A", f"det A = {cm.det_A}, expected n = {n}")
    if cm.det_gamma <= 0:
        raise RegistryError(label, "gamma", f"det gamma = {cm.det_gamma} must be positive")
    if cm.c_prime == 0:
        raise RegistryError(label, "gamma", "c' = 0: gamma^-1 A is upper triangular")
    res = cm.fixed_point_residual()
    if res != 0:
        raise RegistryError(label, "gamma", f"gamma*tau0 != A*tau0 (cross-multiplied residual {res})")
