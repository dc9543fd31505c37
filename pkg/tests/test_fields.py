from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cy4surf.errors import FieldError, NonInvertible, ZeroInversion
from cy4surf.fields import (
    QQ,
    ExtensionField,
    PrimeField,
    compatible_prime,
    invert,
    is_prime,
    parse_field,
    root_of_minus_one,
)
from oracles import roots_of_minus_one_mod

Q_I = ExtensionField(QQ, (1, 0, 1))
Q_ZETA12 = ExtensionField(QQ, (1, 0, -1, 0, 1))
F13 = PrimeField(13)
F49 = ExtensionField(PrimeField(7), (1, 0, 1))  # x^2 + 1 is irreducible mod 7

SMALL_PRIMES = [p for p in range(2, 100) if all(p % q for q in range(2, p))]


# -- invert ---------------------------------------------------------------------------


@pytest.mark.parametrize("F", [QQ, F13, Q_I, Q_ZETA12, F49])
def test_invert_one(F):
    assert F.eq(invert(F.one(), F), F.one())


def test_invert_z_in_gaussian_rationals():
    z = Q_I.generator
    assert invert(z, Q_I) == Q_I.neg(z)


def test_invert_two_mod_13():
    assert invert(2, F13) == 7


@pytest.mark.parametrize("F", [QQ, F13, Q_I])
def test_invert_zero_raises(F):
    with pytest.raises(ZeroInversion):
        invert(F.zero(), F)


def test_zero_divisor_in_unverified_extension_is_reported():
    # degree 6 over Q is beyond the verified range, so z^6 - 1 is accepted on trust
    F = ExtensionField(QQ, (-1, 0, 0, 0, 0, 0, 1))
    assert not F.irreducibility_verified
    z_minus_1 = F.sub(F.generator, F.one())
    with pytest.raises(NonInvertible):
        invert(z_minus_1, F)


def test_reducible_min_poly_rejected():
    with pytest.raises(FieldError):
        ExtensionField(QQ, (-1, 0, 1))  # z^2 - 1
    with pytest.raises(FieldError):
        ExtensionField(QQ, (1, 0, 2, 0, 1))  # (z^2 + 1)^2
    with pytest.raises(FieldError):
        ExtensionField(PrimeField(13), (1, 0, 1))  # 5^2 = -1 mod 13


def test_non_prime_rejected():
    with pytest.raises(FieldError):
        PrimeField(10003)


def test_verified_flags():
    assert Q_I.irreducibility_verified
    assert Q_ZETA12.irreducibility_verified
    assert F49.irreducibility_verified


# -- field axioms -------------------------------------------------------------------


def _elements(F, seed, count=3):
    rng = np.random.default_rng(seed)
    return [F.random(rng) for _ in range(count)]


@pytest.mark.parametrize("F", [QQ, F13, PrimeField(10007), Q_I, Q_ZETA12, F49])
@given(seed=st.integers(0, 2**32 - 1))
def test_field_axioms(F, seed):
    a, b, c = _elements(F, seed)
    assert F.eq(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))
    assert F.eq(F.add(F.add(a, b), c), F.add(a, F.add(b, c)))
    assert F.eq(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))
    assert F.eq(F.mul(a, b), F.mul(b, a))
    if not F.is_zero(a):
        assert F.eq(F.mul(a, invert(a, F)), F.one())


@given(st.lists(st.fractions(max_denominator=50), min_size=1, max_size=9))
def test_reduce_idempotent(coeffs):
    for F in (Q_I, Q_ZETA12):
        once = F.reduce(coeffs)
        assert F.reduce(once) == once


def test_rational_elements_lowest_terms():
    x = QQ.div(QQ.from_int(6), QQ.from_int(-4))
    assert x == Fraction(-3, 2) and x.denominator > 0


def test_residues_in_range():
    F = PrimeField(13)
    assert F.from_int(-1) == 12
    assert all(0 <= F.mul(a, b) < 13 for a in range(13) for b in range(13))


# -- roots of -1 ------------------------------------------------------------------------


def test_root_examples():
    assert root_of_minus_one(1, F13) == 12
    assert root_of_minus_one(6, F13) == 2
    assert root_of_minus_one(6, PrimeField(7)) is None


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_root_of_minus_one_exhaustive(p):
    F = PrimeField(p)
    for k in range(1, 13):
        found = root_of_minus_one(k, F)
        brute = roots_of_minus_one_mod(k, p)
        if brute:
            assert found in brute
        else:
            assert found is None


@pytest.mark.parametrize("p", SMALL_PRIMES[1:])
def test_root_exists_iff_two_adic_condition(p):
    # for odd p: zeta^k = -1 solvable iff v2(k) < v2(p - 1)
    def v2(n):
        return (n & -n).bit_length() - 1

    for k in range(1, 13):
        exists = root_of_minus_one(k, PrimeField(p)) is not None
        assert exists == (v2(k) < v2(p - 1))
        if (p - 1) % (2 * k) == 0:
            assert exists


def test_two_k_divisibility_is_not_necessary():
    # k = 3, p = 5: 4^3 = 64 = -1 mod 5 although 6 does not divide 4
    assert (5 - 1) % 6 != 0
    assert root_of_minus_one(3, PrimeField(5)) is not None


def test_roots_in_extensions():
    z6 = root_of_minus_one(6, Q_ZETA12)
    assert z6 is not None and Q_ZETA12.eq(Q_ZETA12.pow(z6, 6), Q_ZETA12.from_int(-1))
    i = root_of_minus_one(2, Q_I)
    assert Q_I.eq(Q_I.mul(i, i), Q_I.from_int(-1))
    assert root_of_minus_one(2, QQ) is None
    assert root_of_minus_one(3, QQ) == -1


# -- parsing and primes -----------------------------------------------------------------


@pytest.mark.parametrize(
    "text, expected",
    [("Q", QQ), ("Fp:13", F13), ("Q[z]/(z^2+1)", Q_I), ("Q[z]/(z^4-z^2+1)", Q_ZETA12), ("Fp:7[z]/(z^2+1)", F49)],
)
def test_parse_field(text, expected):
    assert parse_field(text) == expected


def test_parse_field_roundtrip():
    for F in (QQ, F13, Q_I, Q_ZETA12, F49):
        assert parse_field(str(F)) == F


def test_parse_field_garbage():
    with pytest.raises(FieldError):
        parse_field("R")


def test_compatible_prime():
    assert compatible_prime(13, 12) == 13
    assert compatible_prime(10007, 12) == 10009
    assert compatible_prime(10000) == 10007
    assert is_prime(10009) and not is_prime(10003)


def test_is_prime_against_trial_division():
    ref = [n for n in range(2, 5000) if all(n % q for q in range(2, int(n**0.5) + 1))]
    assert [n for n in range(5000) if is_prime(n)] == ref
