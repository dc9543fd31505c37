from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cy4surf.constructions import random_polynomial
from cy4surf.errors import BasisMismatch, FieldMismatch, NotHomogeneous, ParseError, VariableCountMismatch
from cy4surf.fields import QQ, ExtensionField, PrimeField
from cy4surf.polyring import HomogeneousPolynomial as P
from cy4surf.polyring import coefficient_vector, grevlex_key, monomial_basis, multiply
from oracles import binom, monomials

F13 = PrimeField(13)
Q_I = ExtensionField(QQ, (1, 0, 1))


def x(i, n=6, F=QQ):
    return P.variable(F, n, i)


# -- monomial bases ---------------------------------------------------------------------


def test_basis_examples():
    assert monomial_basis(6, 0) == ((0,) * 6,)
    assert monomial_basis(2, 3) == ((3, 0), (2, 1), (1, 2), (0, 3))
    assert len(monomial_basis(6, 6)) == 462


@pytest.mark.parametrize("n", range(1, 9))
def test_basis_sizes(n):
    for d in range(11):
        assert len(monomial_basis(n, d)) == binom(d + n - 1, n - 1)


def test_basis_matches_enumeration_and_is_grevlex_sorted():
    for n in range(1, 5):
        for d in range(6):
            basis = monomial_basis(n, d)
            assert set(basis) == set(monomials(n, d))
            assert list(basis) == sorted(basis, key=grevlex_key)


def test_grevlex_small_case():
    # in 3 variables, degree 2: x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2
    assert monomial_basis(3, 2) == ((2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2))


# -- multiplication ---------------------------------------------------------------------


def test_multiply_examples():
    f = P.parse("x0^2 + 3*x1*x2", QQ, 6)
    assert multiply(f, P.constant(QQ, 6)) == f
    assert multiply(x(0) + x(1), x(0) - x(1)) == P.parse("x0^2 - x1^2", QQ, 6)
    lhs = multiply(P.parse("x0^2 + x1^2", QQ, 6), P.parse("x0^4 - x0^2*x1^2 + x1^4", QQ, 6))
    assert lhs == P.parse("x0^6 + x1^6", QQ, 6)


def test_multiply_mismatches():
    with pytest.raises(FieldMismatch):
        multiply(x(0), x(0, F=F13))
    with pytest.raises(VariableCountMismatch):
        multiply(x(0), x(0, n=5))


def _random_triple(F, seed, n_vars=4):
    rng = np.random.default_rng(seed)
    return [random_polynomial(F, n_vars, int(rng.integers(0, 4)), rng) for _ in range(3)]


@pytest.mark.parametrize("F", [QQ, F13, Q_I])
@given(seed=st.integers(0, 2**32 - 1))
def test_multiply_commutative_associative(F, seed):
    f, g, h = _random_triple(F, seed)
    assert multiply(f, g) == multiply(g, f)
    assert multiply(multiply(f, g), h) == multiply(f, multiply(g, h))


def test_zero_coefficients_pruned():
    f = multiply(x(0, F=F13) + x(1, F=F13), x(0, F=F13) - x(1, F=F13))
    assert (1, 1, 0, 0, 0, 0) not in f.terms


# -- coefficient vectors ------------------------------------------------------------------


def test_coefficient_vector_examples():
    zero = P.zero(QQ, 6, 3)
    assert coefficient_vector(zero) == [0] * 56
    basis = monomial_basis(6, 6)
    v = coefficient_vector(x(0) ** 6)
    assert v[basis.index((6, 0, 0, 0, 0, 0))] == 1 and sum(v) == 1
    fermat = P.parse("x0^6 + x1^6 + x2^6 + x3^6 + x4^6 + x5^6", QQ, 6)
    assert sorted(coefficient_vector(fermat), reverse=True)[:7] == [1] * 6 + [0]


def test_coefficient_vector_basis_mismatch():
    with pytest.raises(BasisMismatch):
        coefficient_vector(x(0) ** 2, basis=[(0, 2, 0, 0, 0, 0)])


@pytest.mark.parametrize("F", [QQ, F13, Q_I])
@given(seed=st.integers(0, 2**32 - 1))
def test_coefficient_vector_roundtrip(F, seed):
    f = _random_triple(F, seed)[0]
    assert P.from_vector(F, f.n_vars, f.degree, coefficient_vector(f)) == f


# -- parsing ------------------------------------------------------------------------------


def test_parse_forms():
    f = P.parse("2 x0^2 x1 - (x1 + x2)^3 / 4", QQ, 3)
    g = x(0, 3) * x(0, 3) * x(1, 3) * 2 - (x(1, 3) + x(2, 3)) ** 3 * Fraction(1, 4)
    assert f == g


def test_parse_extension_coefficients():
    f = P.parse("x0^2 + z*x1^2", Q_I, 2)
    g = P.parse("x0^2 - z*x1^2", Q_I, 2)
    assert multiply(f, g) == P.parse("x0^4 + x1^4", Q_I, 2)


def test_parse_mod_p():
    f = P.parse("x0 + 15*x1", F13, 2)
    assert f.coefficient((0, 1)) == 2


def test_parse_errors():
    with pytest.raises(NotHomogeneous):
        P.parse("x0^2 + x1", QQ, 2)
    with pytest.raises(ParseError) as info:
        P.parse("x0 + * x1", QQ, 2)
    assert info.value.column == 6
    with pytest.raises(ParseError):
        P.parse("x7", QQ, 2)
    with pytest.raises(ParseError):
        P.parse("z*x0", QQ, 2)
    with pytest.raises(ParseError):
        P.parse("x0 / x1", QQ, 2)


def test_str_roundtrip():
    for text in ["x0^6 + x1^6", "x0^3 + 5*x1^3", "-x0*x1 + 3*x2^2"]:
        f = P.parse(text, F13, 3 if "x2" in text else 2)
        assert P.parse(str(f), F13, f.n_vars) == f
