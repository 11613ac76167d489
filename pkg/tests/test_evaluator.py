from dataclasses import replace
from fractions import Fraction
from itertools import islice

import pytest

from ramanujan_sato.constants import compute_BC
from ramanujan_sato.evaluator import SummationError, sum_series, verify_all, working_precision
from ramanujan_sato.numerics import Ball
from ramanujan_sato.odeops import a_n_stream, derive_recurrence
from ramanujan_sato.registry import get_group


def test_working_precision():
    assert working_precision(30) == 166
    assert working_precision(50) == 234


def test_sum_16_plus():
    r = sum_series(get_group("16+"), 30)
    assert r.passed and r.digits_agreed >= 30
    assert r.terms_used < 200
    assert r.pi_inverse_ref.mid_str(10).startswith("0.31830988")


def test_checkpoints_improve():
    r = sum_series(get_group("39+39"), 30)
    digits = [d for _, d in r.checkpoints]
    assert digits == sorted(digits)
    assert digits[-1] == r.digits_agreed


def test_deterministic():
    g = get_group("20+20")
    a, b = sum_series(g, 20), sum_series(g, 20)
    assert a.terms_used == b.terms_used
    assert a.partial_sum.to_json() == b.partial_sum.to_json()


def test_first_terms_by_hand():
    # sum of the first three terms A_n (B n + C) x0^n, done directly
    g = get_group("16+")
    sc = compute_BC(g, 128)
    a = list(islice(a_n_stream(derive_recurrence(g.w, g.R).with_initials([1])), 3))
    manual = sum((Ball.exact(a[n], 128) * (sc.B * n + sc.C) * sc.x0_ball ** n for n in range(3)), Ball.exact(0, 128))
    assert a[0] == 1
    assert (manual - sc.C).radius_float() < 1e-30
    assert manual.agreement_digits(sc.C) < 5


def test_wrong_C_fails():
    g = get_group("16+")
    sc = compute_BC(g, working_precision(20))
    bad = replace(sc, C=sc.C * Ball.exact(1 + Fraction(1, 10 ** 8), sc.C.prec))
    r = sum_series(g, 20, constants=bad)
    assert not r.passed and r.digits_agreed < 10


def test_divergence_detected():
    g = get_group("16+")
    sc = compute_BC(g, working_precision(10))
    bad = replace(sc, x0_ball=Ball.exact(2, sc.x0_ball.prec))
    with pytest.raises(SummationError):
        sum_series(g, 10, constants=bad)


def test_term_cap():
    with pytest.raises(SummationError, match="within"):
        sum_series(get_group("39+39"), 30, cap=50)


def test_target_validation():
    with pytest.raises(ValueError):
        sum_series(get_group("16+"), 3)


def test_verify_all_collects_errors():
    good = get_group("16+")
    reports, errors = verify_all(15, [good])
    assert len(reports) == 1 and not errors and reports[0].passed
    j = reports[0].to_json()
    assert j["passed"] and j["label"] == "16+"
