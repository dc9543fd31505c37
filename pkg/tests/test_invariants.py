from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cy4surf.chern import SurfaceDegrees
from cy4surf.constructions import fermat_sextic_pair, random_pair
from cy4surf.errors import ConsistencyFailure, HalfIntegerError, NegativeRho, NonIntegerRho
from cy4surf.fields import PrimeField
from cy4surf.invariants import (
    check_report,
    full_report,
    half_integer,
    is_rigid_by_degree,
    rho_gamma,
    rho_vanishes_for_divisor_product,
    rho_vanishes_inside_divisor,
    rigid_table,
    rigid_triples,
    virtual_dimension,
)

F10007 = PrimeField(10007)
RIGID_ROWS = [
    ((1, 1, 1), 19),
    ((1, 1, 2), 32),
    ((1, 1, 3), 37),
    ((1, 2, 2), 54),
    ((1, 2, 3), 62),
    ((2, 2, 2), 92),
    ((1, 1, 4), 32),
    ((2, 2, 3), 106),
]


def test_virtual_dimension_examples():
    assert virtual_dimension(1, 21) == Fraction(-19, 2)
    assert virtual_dimension(0, 0) == 0
    assert virtual_dimension(2, 66) == -31


def test_half_integer():
    assert half_integer(Fraction(3, 2)) == Fraction(3, 2)
    with pytest.raises(HalfIntegerError):
        half_integer(Fraction(1, 3))


def test_rho_gamma_examples():
    assert rho_gamma(0, 1, 21) == 19
    assert rho_gamma(3, 54, 243) == 141
    assert rho_gamma(0, 0, 0) == 0
    with pytest.raises(NonIntegerRho):
        rho_gamma(Fraction(1, 4), 0, 0)
    with pytest.raises(NegativeRho):
        rho_gamma(0, 5, 1)


def test_rigidity_examples():
    assert is_rigid_by_degree(5, (1, 1, 1))
    assert not is_rigid_by_degree(5, (2, 3, 3))
    assert is_rigid_by_degree(5, (2, 2, 3))
    with pytest.raises(ValueError):
        is_rigid_by_degree(5, (1, 1))


def test_rho_vanishing_criteria():
    assert rho_vanishes_for_divisor_product(0, True)
    assert not rho_vanishes_for_divisor_product(1, True)
    assert rho_vanishes_inside_divisor(0, 0, True)
    assert not rho_vanishes_inside_divisor(0, 1, True)


def test_rigid_triples_are_exactly_eight():
    assert sorted(rigid_triples(5, 4)) == sorted(d for d, _ in RIGID_ROWS)
    # larger degrees add nothing: an entry of 5 or more already breaks the inequality
    assert rigid_triples(5, 8) == rigid_triples(5, 4)


def test_rigid_table_order_and_values():
    rows = rigid_table()
    assert [(r.surface_degrees, r.rho_gamma) for r in rows] == RIGID_ROWS
    for r in rows:
        assert r.rvd == 0 and r.ok


def test_rigid_table_sum_lex_order():
    rows = rigid_table(order="sum-lex")
    keys = [(sum(r.surface_degrees), r.surface_degrees) for r in rows]
    assert keys == sorted(keys)
    assert sorted(r.rho_gamma for r in rows) == sorted(rho for _, rho in RIGID_ROWS)


def test_full_report_degree_only_examples():
    r = full_report(SurfaceDegrees(5, (6,), (1, 2, 3)))
    assert (r.chi_OS, r.gamma_sq, r.rigid_by_inequality, r.rvd, r.rho_gamma) == (2, 66, True, 0, 62)
    assert full_report(SurfaceDegrees(5, (6,), (1, 1, 4))).rho_gamma == 32
    assert r.h0_N is None and r.semi_regular


def test_degree_only_refuses_non_rigid():
    r = full_report(SurfaceDegrees(5, (6,), (3, 3, 3)))
    assert r.rvd is None and r.rho_gamma is None
    assert r.note == "explicit polynomials required"
    assert r.vd == Fraction(54) - Fraction(243, 2)


@pytest.mark.parametrize("degrees, rvd, rho", [((1, 3, 3), 1, 71), ((2, 3, 3), 1, 122), ((3, 3, 3), 3, 141)])
def test_full_report_explicit_fermat(degrees, rvd, rho):
    r = full_report(fermat_sextic_pair(degrees))
    assert (r.h0_N, r.rvd, r.rho_gamma) == (rvd, rvd, rho)
    assert r.ok, r.failed()
    names = {c.name for c in r.checks}
    assert {"chi_two_path", "chi_N_two_path", "regular_sequence", "obstruction_shape", "construction_reference"} <= names


def test_plane_report():
    r = full_report(fermat_sextic_pair((1, 1, 1)))
    assert (r.chi_OS, r.gamma_sq, r.vd, r.h0_N, r.rho_gamma) == (1, 21, Fraction(-19, 2), 0, 19)
    assert any(c.name == "rigid_kernel_zero" and c.passed for c in r.checks)


def test_construction_discrepancy_is_flagged():
    r = full_report(fermat_sextic_pair((1, 3, 3)), reference=2)
    assert not r.ok
    bad = r.failed()
    assert [c.name for c in bad] == ["construction_reference"]
    assert "construction discrepancy" in bad[0].detail
    with pytest.raises(ConsistencyFailure):
        check_report(r)


def test_cross_check_agreement():
    pair = fermat_sextic_pair((2, 3, 3))
    other = fermat_sextic_pair((2, 3, 3), PrimeField(10009))
    r = full_report(pair, cross_check=[other])
    assert any(c.name == "field_agreement[Fp:10009]" and c.passed for c in r.checks)


def test_as_dict_numbers():
    d = full_report(SurfaceDegrees(5, (6,), (1, 1, 1))).as_dict()
    assert d["vd"] == "-19/2" and d["rvd"] == 0 and d["rho_gamma"] == 19 and d["ok"]


@settings(max_examples=12)
@given(seed=st.integers(0, 2**63 - 1), degrees=st.sampled_from([d for d, _ in RIGID_ROWS]))
def test_random_rigid_reports_are_consistent(seed, degrees):
    r = full_report(random_pair(5, (6,), degrees, F10007, seed))
    assert r.ok, r.failed()
    assert r.h0_N == 0
    assert r.rvd - r.vd == Fraction(r.rho_gamma, 2)
    assert r.rvd == Fraction(r.chi_N, 2) + Fraction(r.rho_gamma, 2)
    assert r.h1_N >= 0
