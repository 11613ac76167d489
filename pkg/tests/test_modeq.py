from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ramanujan_sato.constants import modular_equation
from ramanujan_sato.modeq import (
    ModularEquation,
    ModularEquationError,
    diagonal_roots,
    find_modular_equation,
    psi_degree,
    psi_from_symmetric,
    root_matches,
    symmetric_function_check,
    verify_annihilation,
)
from ramanujan_sato.modeq.bareiss import nullspace
from ramanujan_sato.numerics import QuadExt
from ramanujan_sato.qseries import Poly
from ramanujan_sato.registry import get_group, load_builtin

LABELS = [g.label for g in load_builtin()]


@pytest.mark.parametrize("n,deg", [(2, 3), (3, 4), (4, 6), (5, 6), (6, 12)])
def test_psi_degree(n, deg):
    assert psi_degree(n) == deg


@pytest.mark.parametrize("label", LABELS)
def test_modular_equation_matches_table(label):
    g = get_group(label)
    psi = modular_equation(g)
    assert psi == g.expected_psi
    assert psi.is_symmetric() and psi.content() == 1
    assert verify_annihilation(psi, g, 60).is_zero()


@pytest.mark.parametrize("label", LABELS)
def test_symmetric_functions_rebuild_psi(label):
    g = get_group(label)
    checks = symmetric_function_check(g, 96)
    assert all(res.is_zero() for _, res in checks)
    assert psi_from_symmetric([p for p, _ in checks], g.meq_n) == g.expected_psi


def test_39_39_symmetric_identities():
    polys = [p for p, _ in symmetric_function_check(get_group("39+39"), 96)]
    assert polys == [Poly([0, -2, 1]), Poly([0, -1, 2]), Poly([0, 0, 0, -1])]


def test_39_39_format():
    psi = modular_equation(get_group("39+39"))
    assert psi.format() == "Y^3 + (2X − X^2)Y^2 + (−X + 2X^2)Y + X^3"


def test_order_too_low():
    with pytest.raises(ValueError):
        find_modular_equation(get_group("39+39"), order=10)


def test_wrong_degree_has_no_relation():
    # 16+ needs degree psi(3) = 4; pretending n = 2 forces a degree-3 search in x(2 tau)
    g = get_group("16+")
    from dataclasses import replace

    fake = replace(g, meq_n=2)
    with pytest.raises(ModularEquationError):
        find_modular_equation(fake, 96, retries=0)


def test_annihilation_detects_mutation():
    g = get_group("39+39")
    psi = g.expected_psi
    c = [list(r) for r in psi.coeffs]
    c[1][1] += 1
    assert not verify_annihilation(ModularEquation(2, c), g, 30).is_zero()


def test_diagonal_roots_39_39():
    g = get_group("39+39")
    roots = [r for r, _ in diagonal_roots(modular_equation(g))]
    x0 = QuadExt(3, -2, 2)
    assert x0 in roots
    assert root_matches(modular_equation(g), x0)
    assert not root_matches(modular_equation(g), QuadExt(3, 2, 2) + 1)


@pytest.mark.parametrize("label", LABELS)
def test_table_x0_is_a_diagonal_root(label):
    g = get_group(label)
    psi = modular_equation(g)
    assert root_matches(psi, g.expected_x0)
    assert g.expected_x0 in [r for r, _ in diagonal_roots(psi)]


def test_nullspace_small():
    basis = nullspace([[1, 2, 3], [2, 4, 6]])
    assert len(basis) == 2
    for v in basis:
        assert v[0] + 2 * v[1] + 3 * v[2] == 0
    assert nullspace([[1, 0], [0, 1]]) == []


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=5, max_size=5), min_size=1, max_size=4))
def test_nullspace_property(rows):
    basis = nullspace(rows)
    for v in basis:
        assert all(sum(Fraction(a) * b for a, b in zip(r, v)) == 0 for r in rows)
    assert len(basis) >= 5 - len(rows)


def test_equation_helpers():
    psi = modular_equation(get_group("39+39"))
    assert psi.size == 4 and psi.degree_x() == 3 and psi.degree_y() == 3
    assert psi.partial(dy=1).degree_y() == 2
    j = psi.to_json()
    assert j["n"] == 2
