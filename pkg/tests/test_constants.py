from dataclasses import replace
from fractions import Fraction

import mpmath
import pytest

from ramanujan_sato.constants import (
    CMError,
    ConstantsError,
    compare_closed_forms,
    compute_BC,
    compute_W,
    eta_value,
    implicit_derivatives,
    modular_equation,
    q0_ball,
    select_x0,
    verify_fixed_point,
)
from ramanujan_sato.numerics import QuadExt, quad_eval
from ramanujan_sato.registry import get_group, load_builtin
from _oracles import brute_x_coeffs

LABELS = [g.label for g in load_builtin()]


@pytest.fixture(scope="module")
def constants():
    return {g.label: compute_BC(g) for g in load_builtin()}


@pytest.mark.parametrize("label", LABELS)
def test_fixed_point(label):
    g = get_group(label)
    rep = verify_fixed_point(g.cm, g.meq_n)
    assert rep.det_M == Fraction(g.meq_n, rep.det_gamma)
    assert rep.c_prime != 0


def test_fixed_point_rejects_wrong_A():
    cm = get_group("39+39").cm
    with pytest.raises(CMError):
        verify_fixed_point(replace(cm, A=(1, 1, 0, 2)), 2)
    with pytest.raises(CMError, match="det A"):
        verify_fixed_point(cm, 3)


def test_x_at_tau0_against_mpmath():
    # oracle: plain q-series sum of x with 200 brute-force coefficients at mpmath precision
    g = get_group("39+39")
    coeffs = brute_x_coeffs(g, 200)
    with mpmath.workdps(40):
        tau = mpmath.mpc(0, mpmath.sqrt(mpmath.mpf(2) / 39))
        q = mpmath.exp(2j * mpmath.pi * tau)
        ref = sum(c * q ** (k + 1) for k, c in enumerate(coeffs))
        ref_re = Fraction(mpmath.nstr(ref.real, 35))
    xv = eta_value(g, 128)
    assert xv.im.contains_zero()
    assert xv.re.inflate(Fraction(1, 10**32)).contains(ref_re)


def test_q0_is_small():
    for g in load_builtin():
        q = q0_ball(g.cm, 64)
        assert float(abs(complex(float(q.re), float(q.im)))) < 0.5


@pytest.mark.parametrize("label", LABELS)
def test_select_x0(label):
    g = get_group(label)
    exact, ball = select_x0(g)
    assert exact == g.expected_x0
    diff = ball - quad_eval(exact, 192)
    assert diff.radius_float() < 1e-30 and diff.contains_zero()


def test_x0_examples():
    assert get_group("39+39").expected_x0 == QuadExt(3, -2, 2)
    assert get_group("26+26").expected_x0 == QuadExt(Fraction(11, 2), Fraction(-3, 2), 13)
    x = get_group("14+7").expected_x0
    assert x == QuadExt(Fraction(-3, 4), Fraction(1, 4), 7) and x.sign() < 0


def test_derivatives_39_39():
    g = get_group("39+39")
    y1, y2 = implicit_derivatives(modular_equation(g), QuadExt(3, -2, 2))
    assert y1 == -1
    # -16 - 25/sqrt(2) = -16 - (25/2) sqrt(2)
    assert y2 == QuadExt(-16, Fraction(-25, 2), 2)


def test_y1_is_minus_one_everywhere(constants):
    for sc in constants.values():
        assert sc.y1 == -1


def test_W_of_39_39():
    g = get_group("39+39")
    x0 = QuadExt(3, -2, 2)
    W, dW = compute_W(g, x0)
    assert (W * W).overlaps(quad_eval(g.w(x0), 192))
    # the closed form -6(-2 + sqrt 2) sqrt(7501 - 5304 sqrt 2) = 0.3730435...
    assert W.mid_str(7).startswith("0.373043")
    ref = quad_eval(QuadExt(7501, -5304, 2), 192).sqrt() * quad_eval(QuadExt(12, -6, 2), 192)
    assert W.agreement_digits(ref) >= 45


@pytest.mark.parametrize("label", LABELS)
def test_closed_forms(label, constants):
    g = get_group(label)
    for cmp in compare_closed_forms(g, constants[label]):
        assert cmp.ok, (cmp.name, cmp.digits)
        assert cmp.digits >= 40


def test_B_values(constants):
    assert constants["14+7"].B.mid_str(6).startswith("0.26568")
    assert constants["39+39"].B.mid_str(6).startswith("0.16895")


def test_conjugate_root_is_rejected_numerically():
    # both conjugates solve Psi(X, X) = 0; only the numeric value of x(tau0) separates them
    g = get_group("14+14")
    other = QuadExt(Fraction(23, 2), Fraction(5, 2), 21)
    psi = modular_equation(g)
    assert psi.diagonal()(other) == 0
    exact, _ = select_x0(g)
    assert exact != other


def test_fractional_lead_is_refused():
    g = get_group("39+39")
    bad = replace(g, eta_spec=replace(g.eta_spec, factors=((3, 1), (13, 1), (1, -1), (39, -1), (2, 1))))
    with pytest.raises(ConstantsError):
        eta_value(bad, 64)


def test_json(constants):
    j = constants["16+"].to_json()
    assert set(j) >= {"x0", "y1", "y2", "W", "dW", "B", "C"}
