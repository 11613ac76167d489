from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from ramanujan_sato.numerics import (
    GAUSS,
    MACHIN,
    Ball,
    BallComplex,
    BallDomainError,
    FieldMismatchError,
    QuadExt,
    ball_sqrt,
    format_rational,
    machin_pi,
    parse_rational,
    quad_eval,
    quad_eval_complex,
    ref_pi,
    squarefree_part,
)
from _oracles import mp_value

rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q) < 10**9)
nonzero = rationals.filter(lambda q: q != 0)
fields = st.sampled_from([2, 3, 5, 6, 7, 10, 13, 21, -1, -3, -78])


def quads(d):
    return st.builds(lambda a, b: QuadExt(a, b, d), rationals, rationals)


# -- rationals ---------------------------------------------------------------

@given(rationals, nonzero)
def test_rational_exactness(p, q):
    assert (p + q) - q == p
    assert (p * q) / q == p


@given(rationals)
def test_rational_round_trip(p):
    assert parse_rational(format_rational(p)) == p


def test_format_rational():
    assert format_rational(Fraction(-147, 2)) == "-147/2"
    assert format_rational(4) == "4"
    with pytest.raises(ValueError):
        parse_rational("1/0")


@pytest.mark.parametrize("n,expected", [(12, (2, 3)), (-78, (1, -78)), (72, (6, 2)), (49, (7, 1)), (-4, (2, -1))])
def test_squarefree_part(n, expected):
    assert squarefree_part(n) == expected


# -- quadratic fields ----------------------------------------------------------

@settings(max_examples=60)
@given(fields.flatmap(lambda d: st.tuples(quads(d), quads(d), quads(d))))
def test_quadext_field_axioms(t):
    x, y, z = t
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    if x != 0:
        assert x * x.inverse() == 1


@given(fields.flatmap(quads))
def test_norm_is_rational(x):
    n = x * x.conjugate()
    assert n.b == 0 and n.a == x.norm() == x.a ** 2 - x.d * x.b ** 2


@settings(max_examples=40)
@given(st.sampled_from([2, 3, 6, 7, 13]).flatmap(quads))
def test_norm_enclosure(x):
    prod = quad_eval(x, 128) * quad_eval(x.conjugate(), 128)
    assert prod.contains(x.norm())


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        QuadExt(0, 1, 2) + QuadExt(0, 1, 3)
    # rationals embedded in any field mix freely
    assert QuadExt(3, 0, 5) + QuadExt(1, 1, 2) == QuadExt(4, 1, 2)


def test_sign_of_real_embedding():
    assert QuadExt(3, -2, 2).sign() == 1
    assert QuadExt(Fraction(-3, 4), Fraction(1, 4), 7).sign() == -1
    assert QuadExt(0, 0, 2).sign() == 0


def test_zeta3():
    z = QuadExt.zeta(3)
    assert z ** 3 == 1 and z != 1
    assert 1 + z + z * z == 0


# -- balls ---------------------------------------------------------------------

def test_quad_eval_examples():
    # oracle: mpmath high-level evaluation at 60 digits
    b = quad_eval(QuadExt(3, -2, 2), 64)
    ref = Fraction(mpmath.nstr(mp_value(Fraction(3), Fraction(-2), 2), 40))
    assert b.inflate(Fraction(1, 10**38)).contains(ref)
    assert b.mid_str(17).startswith("0.1715728752538099")
    zero = quad_eval(QuadExt(0, 0, 2), 64)
    assert zero.contains(0) and zero.radius_float() == 0
    neg = quad_eval(QuadExt(Fraction(-3, 4), Fraction(1, 4), 7), 64)
    assert neg.is_negative()
    assert neg.mid_str(6).startswith("-0.088562")


def test_quad_eval_complex():
    t = quad_eval_complex(QuadExt(Fraction(-1, 2), Fraction(1, 14), -21), 128)
    assert t.re.contains(Fraction(-1, 2))
    assert float(t.im) == pytest.approx(21 ** 0.5 / 14)


@settings(max_examples=80)
@given(rationals, rationals, nonzero)
def test_ball_soundness(p, q, r):
    bp, bq, br = (Ball.exact(v, 80) for v in (p, q, r))
    assert (bp + bq).contains(p + q)
    assert (bp - bq).contains(p - q)
    assert (bp * bq).contains(p * q)
    assert (bp / br).contains(p / r)
    assert ((bp * bq + br) * br).contains((p * q + r) * r)


@settings(max_examples=40)
@given(st.fractions(min_value=Fraction(1, 1000), max_value=10**6, max_denominator=1000))
def test_ball_sqrt_soundness(p):
    s = Ball.exact(p, 96).sqrt()
    assert (s * s).contains(p)
    assert s.is_positive()


def test_ball_sqrt_examples():
    assert ball_sqrt(Ball.exact(4)).contains(2)
    with pytest.raises(BallDomainError, match="w"):
        ball_sqrt(Ball.exact(0), "w")
    with pytest.raises(BallDomainError):
        Ball.exact(-1).sqrt()


def test_ball_division_by_zero_ball():
    with pytest.raises(ZeroDivisionError):
        Ball.exact(1) / Ball.exact(0)


def test_complex_exp_matches_mpmath():
    z = BallComplex(Ball.exact(Fraction(-3, 2), 128), Ball.exact(Fraction(7, 3), 128))
    e = z.exp()
    with mpmath.workdps(50):
        ref = mpmath.exp(mpmath.mpc(mpmath.mpf(-3) / 2, mpmath.mpf(7) / 3))
        re = Fraction(mpmath.nstr(ref.real, 45))
        im = Fraction(mpmath.nstr(ref.imag, 45))
    assert e.re.inflate(Fraction(1, 10**40)).contains(re)
    assert e.im.inflate(Fraction(1, 10**40)).contains(im)
    assert e.re.radius_float() < 1e-30


def test_json_serialization():
    j = Ball.exact(Fraction(1, 3), 64).to_json()
    assert set(j) == {"mid", "rad", "prec"} and j["prec"] == 64


# -- pi ------------------------------------------------------------------------

def test_ref_pi_radius_and_value():
    for prec in (16, 64, 256):
        p = ref_pi(prec)
        assert p.radius_float() <= 2.0 ** (4 - prec)
    with mpmath.workdps(50):
        pi45 = Fraction(mpmath.nstr(mpmath.pi, 45))
    assert ref_pi(64).contains(pi45)
    assert ref_pi(64).mid_str(20).startswith("3.14159265358979323")
    assert ref_pi(16).contains(Fraction("3.1416"))


def test_two_machin_formulas_agree():
    a = machin_pi(256, MACHIN)
    b = machin_pi(256, GAUSS)
    assert a.overlaps(b)
    assert a.agreement_digits(b) >= 70


def test_ref_pi_matches_mpmath():
    with mpmath.workdps(80):
        ref = Fraction(mpmath.nstr(mpmath.pi, 78))
    assert ref_pi(192).inflate(Fraction(1, 10**76)).contains(ref)


@pytest.mark.parametrize("lo,hi", [(16, 32), (32, 256), (64, 1024), (100, 101)])
def test_ref_pi_monotone(lo, hi):
    assert ref_pi(lo).contains(ref_pi(hi))


def test_ref_pi_precondition():
    with pytest.raises(ValueError):
        ref_pi(8)


@settings(max_examples=60)
@given(st.integers(16, 400), st.integers(1, 400))
def test_ref_pi_nested(lo, extra):
    assert ref_pi(lo).contains(ref_pi(lo + extra))
