"""Per-group oracle checks shared by ``selftest`` and ``group check``."""

from dataclasses import dataclass

from .constants import compare_closed_forms, compute_BC, verify_fixed_point
from .modeq import find_modular_equation, symmetric_function_check, psi_from_symmetric, verify_annihilation
from .odeops import derive_recurrence, extract_R, initial_coefficients, ode_residual


@dataclass(frozen=True)
class CheckResult:
    label: str
    name: str
    ok: bool
    detail: str = ""

    def line(self):
        return f"{'PASS' if self.ok else 'FAIL'}  {self.label:<7} {self.name}" + (f": {self.detail}" if self.detail else "")


def _run(label, name, fn):
    try:
        ok, detail = fn()
    except Exception as exc:  # a failing check must not stop the others
        return CheckResult(label, name, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(label, name, bool(ok), detail)


def check_group(g, order=64, prec=192):
    """Run every oracle available for the record; returns a list of CheckResult."""
    out = []
    add = lambda name, fn: out.append(_run(g.label, name, fn))

    x = g.x_series(8)
    add("x = q + O(q^2)", lambda: (x.lead == 1 and x.coeffs[0] == 1, x.format(6)))
    add("R is a polynomial in x equal to the stored R", lambda: (lambda R: (R == g.R, R.format()))(extract_R(g, order)))
    add("ODE residual vanishes", lambda: (lambda r: (r.is_zero(), f"through q^{r.precision}"))(ode_residual(g, max(order, 48))))
    if g.expected_recurrence is not None:
        add("recurrence", lambda: (derive_recurrence(g.w, g.R).terms == tuple(g.expected_recurrence), ""))
    if g.expected_initials:
        k = len(g.expected_initials)
        add("initial values", lambda: (lambda a: (a == list(g.expected_initials), " ".join(map(str, a))))(initial_coefficients(g, k)))
    psi_box = []

    def modeq():
        psi = find_modular_equation(g)
        psi_box.append(psi)
        if g.expected_psi is None:
            return True, psi.format()
        return psi == g.expected_psi, psi.format()

    add("modular equation", modeq)
    if psi_box:
        psi = psi_box[0]
        add("annihilation through q^60", lambda: (verify_annihilation(psi, g, 60).is_zero(), ""))
        if g.meq_n in (2, 3):
            add("symmetric functions rebuild Psi", lambda: (
                psi_from_symmetric([p for p, _ in symmetric_function_check(g)], g.meq_n) == psi, ""))
    if g.cm is not None:
        add("CM fixed point", lambda: (verify_fixed_point(g.cm, g.meq_n) is not None, g.cm.format_tau0()))

        def bc():
            sc = compute_BC(g, prec)
            notes = []
            ok = True
            if g.expected_x0 is not None:
                ok &= sc.x0_exact == g.expected_x0
                notes.append(f"x0 = {sc.x0_exact}")
            for c in compare_closed_forms(g, sc):
                ok &= c.ok
                notes.append(f"{c.name} agrees to {c.digits} digits")
            return ok, "; ".join(notes)

        add("x0, B, C", bc)
    return out
