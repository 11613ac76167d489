from fractions import Fraction
from itertools import islice

import pytest
from hypothesis import given, settings, strategies as st

from ramanujan_sato.odeops import (
    Recurrence,
    RecurrenceError,
    a_n_stream,
    apply_operator,
    build_z,
    closed_form_term,
    derive_recurrence,
    derive_recurrence_by_substitution,
    extract_R,
    initial_coefficients,
    lagrange,
    ode_residual,
)
from ramanujan_sato.qseries import Poly
from ramanujan_sato.registry import get_group, load_builtin

LABELS = [g.label for g in load_builtin()]


def test_z_of_39_39():
    # 1 + q + 3q^2 + q^3 + 5q^4 + 3q^5 + 7q^6 + 5q^7 from the eta quotient by hand
    z = build_z(get_group("39+39"), 16)
    assert z.lead == 0
    assert z.integer_coeffs(0, 8) == [1, 1, 3, 1, 5, 3, 7, 5]


def test_build_z_needs_order():
    with pytest.raises(ValueError):
        build_z(get_group("39+39"), 4)


@pytest.mark.parametrize("label", LABELS)
def test_extract_R(label):
    g = get_group(label)
    assert extract_R(g, 64) == g.R


@pytest.mark.parametrize("label", LABELS)
def test_ode_residual_vanishes(label):
    assert ode_residual(get_group(label), 48).is_zero()


def test_ode_residual_detects_bad_R():
    g = get_group("16+")
    bad = g.R + Poly([0, 0, 1])
    assert not ode_residual(g, 32, R=bad).is_zero()


def test_closed_form_P0():
    n = Poly([0, 1])
    assert closed_form_term(1, 0, 0) == n ** 3 * 2


@pytest.mark.parametrize("label", LABELS)
def test_recurrence_matches_table(label):
    g = get_group(label)
    rec = derive_recurrence(g.w, g.R)
    assert rec.terms == tuple(g.expected_recurrence)
    assert rec.terms[0] == Poly([0, 0, 0, 2])
    assert derive_recurrence_by_substitution(g.w, g.R).terms == rec.terms


def test_26_26_fractional_row():
    g = get_group("26+26")
    last = derive_recurrence(g.w, g.R).terms[-1]
    assert last == Poly([Fraction(343, 4), Fraction(-147, 2), 21, -2])


def test_recurrence_rejects_unnormalized():
    with pytest.raises(RecurrenceError):
        derive_recurrence(Poly([2, 1]), Poly([0, 1]))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=5), st.lists(st.integers(-9, 9), min_size=1, max_size=4))
def test_two_derivations_agree(wtail, rtail):
    w = Poly([1] + wtail)
    R = Poly([0] + rtail)
    assert derive_recurrence(w, R).terms == derive_recurrence_by_substitution(w, R).terms


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=4), st.lists(st.integers(-9, 9), min_size=1, max_size=3))
def test_stream_solves_operator(wtail, rtail):
    # sum_{n<N} A_n x^n is annihilated by the operator up to x^N
    w, R = Poly([1] + wtail), Poly([0] + rtail)
    rec = derive_recurrence(w, R).with_initials([1])
    N = 12
    f = Poly(list(islice(a_n_stream(rec), N)))
    image = apply_operator(w, R, f)
    assert all(image[k] == 0 for k in range(N))


def test_lagrange():
    p = lagrange([(0, 1), (1, 3), (2, 7)])
    assert p == Poly([1, 1, 1])


@pytest.mark.parametrize("label", LABELS)
def test_initials_match_table(label):
    g = get_group(label)
    init = initial_coefficients(g, len(g.expected_initials))
    assert tuple(init) == tuple(g.expected_initials)


@pytest.mark.parametrize("label", LABELS)
def test_stream_agrees_with_expansion(label):
    g = get_group(label)
    ref = initial_coefficients(g, 24, 48)
    rec = derive_recurrence(g.w, g.R)
    assert list(islice(a_n_stream(rec.with_initials([1])), 24)) == ref
    assert list(islice(a_n_stream(rec.with_initials(g.expected_initials)), 24)) == ref


def test_integrality_observed():
    for g in load_builtin():
        if g.label == "26+26":
            continue
        a = initial_coefficients(g, 12)
        assert all(Fraction(v).denominator == 1 for v in a)


def test_stream_needs_A0():
    with pytest.raises(RecurrenceError):
        next(a_n_stream(Recurrence((Poly([0, 0, 0, 2]),))))


def test_format_and_json():
    g = get_group("16+")
    rec = derive_recurrence(g.w, g.R).with_initials([1, 4])
    assert rec.format().startswith("2n^3 A_n + (")
    assert rec.format().endswith("= 0")
    j = rec.to_json()
    assert j["span"] == rec.span and j["initials"] == ["1", "4"]
    assert j["terms"][0] == ["0", "0", "0", "2"]
