"""Named surface/Calabi-Yau pairs: surfaces on the Fermat sextic and seeded random pairs.

Fermat-sextic surfaces pair the variables as (x0, x1), (x2, x3), (x4, x5) and
take for s_j a factor of x^6 + y^6 in the j-th pair:

    degree 1:  x + a y          a^6 = -1
    degree 2:  x^2 + y^2
    degree 3:  x^3 + b y^3      b^2 = -1
    degree 6 - d: the complementary factor of the degree-d one

so the sextic is sum_j s_j t_j with t_j the complementary factor.
"""
from __future__ import annotations

import numpy as np

from .errors import FieldError, RegularityViolation, ValidationError
from .fields import Field, PrimeField, compatible_prime, root_of_minus_one
from .hilbert import verify_regular_sequence
from .normal_bundle import ExplicitPair
from .polyring import HomogeneousPolynomial, monomial_basis, multiply

FERMAT_N = 5
DEFAULT_PRIME = 10007

# h^0(N_{S/X}) for the canonical Fermat-sextic surfaces, used to flag construction discrepancies
REFERENCE_FERMAT_RVD = {(1, 3, 3): 1, (2, 3, 3): 1, (3, 3, 3): 3}


def fermat_polynomial(field: Field, n_vars: int = 6, degree: int = 6) -> HomogeneousPolynomial:
    terms = {}
    for i in range(n_vars):
        e = [0] * n_vars
        e[i] = degree
        terms[tuple(e)] = field.one()
    return HomogeneousPolynomial(field, n_vars, degree, terms)


def roots_needed(surface_degrees) -> int:
    """k such that the construction needs a root of zeta^k = -1 (1 when none is needed)."""
    ks = [1]
    for d in surface_degrees:
        if d in (1, 5):
            ks.append(6)
        elif d in (3,):
            ks.append(2)
    return max(ks)


def default_construction_field(surface_degrees, minimum: int = 13) -> PrimeField:
    """F_p for a Fermat construction: 10007 when no roots are needed, else the smallest p >= minimum with 2k | p - 1."""
    k = roots_needed(surface_degrees)
    if k == 1:
        return PrimeField(DEFAULT_PRIME)
    return PrimeField(compatible_prime(minimum, 2 * k))


def _binary_form(field, x, y, coeffs):
    """sum_k coeffs[k] x^(D-k) y^k in 6 variables, D = len(coeffs) - 1."""
    D = len(coeffs) - 1
    terms = {}
    for k, c in enumerate(coeffs):
        e = [0] * 6
        e[x] += D - k
        e[y] += k
        terms[tuple(e)] = c
    return HomogeneousPolynomial(field, 6, D, terms)


def _pair_factor(field, x, y, d):
    """(s, t) with s * t = x^6 + y^6 and deg s = d."""
    F = field
    one, zero = F.one(), F.zero()
    if d == 6:
        return _binary_form(F, x, y, [one] + [zero] * 5 + [one]), _binary_form(F, x, y, [one])
    if d in (4, 5):
        t, s = _pair_factor(field, x, y, 6 - d)
        return s, t
    if d == 1:
        a = root_of_minus_one(6, F)
        if a is None:
            raise FieldError(f"{F} has no a with a^6 = -1; degree-1 Fermat factors need one")
        s = _binary_form(F, x, y, [one, a])
        minus_a = F.neg(a)
        t = _binary_form(F, x, y, [F.pow(minus_a, k) for k in range(6)])
        return s, t
    if d == 2:
        s = _binary_form(F, x, y, [one, zero, one])
        t = _binary_form(F, x, y, [one, zero, F.neg(one), zero, one])
        return s, t
    if d == 3:
        b = root_of_minus_one(2, F)
        if b is None:
            raise FieldError(f"{F} has no b with b^2 = -1; degree-3 Fermat factors need one")
        s = _binary_form(F, x, y, [one, zero, zero, b])
        t = _binary_form(F, x, y, [one, zero, zero, F.neg(b)])
        return s, t
    raise ValidationError(f"no Fermat factor of degree {d}")


def fermat_sextic_pair(surface_degrees, field: Field | None = None) -> ExplicitPair:
    """Canonical surface of the given degrees on the Fermat sextic in P^5, with cofactors."""
    surface_degrees = tuple(surface_degrees)
    if len(surface_degrees) != 3:
        raise ValidationError("surfaces on the sextic 4-fold need three equations")
    if field is None:
        field = default_construction_field(surface_degrees)
    f = fermat_polynomial(field)
    s, t = [], []
    for j, d in enumerate(surface_degrees):
        sj, tj = _pair_factor(field, 2 * j, 2 * j + 1, d)
        s.append(sj)
        t.append(tj)
    return ExplicitPair(
        field,
        FERMAT_N,
        (f,),
        tuple(s),
        cofactors=(tuple(t),),
        label=f"fermat-sextic{surface_degrees}",
        meta={"construction": "fermat-sextic"},
    )


def random_polynomial(field, n_vars, degree, rng) -> HomogeneousPolynomial:
    if degree < 0:
        return HomogeneousPolynomial.zero(field, n_vars, degree)
    basis = monomial_basis(n_vars, degree)
    return HomogeneousPolynomial(field, n_vars, degree, {m: field.random(rng) for m in basis})


def random_pair(ambient_N, cy_degrees, surface_degrees, field: Field, seed: int, attempts: int = 5) -> ExplicitPair:
    """A seeded random surface and a random CY complete intersection containing it.

    f_i = sum_j s_j t_ij with random s_j and t_ij, so S lies on X by construction.
    The surface equations are redrawn if they fail to form a regular sequence.
    """
    rng = np.random.default_rng(seed)
    n_vars = ambient_N + 1
    up_to = max(sum(surface_degrees), max(cy_degrees))
    for _ in range(attempts):
        s = [random_polynomial(field, n_vars, d, rng) for d in surface_degrees]
        if verify_regular_sequence(s, up_to):
            break
    else:
        raise RegularityViolation("could not draw a regular sequence; field too small?")
    cy, cof = [], []
    for e in cy_degrees:
        row = [random_polynomial(field, n_vars, e - d, rng) for d in surface_degrees]
        f = HomogeneousPolynomial.zero(field, n_vars, e)
        for sj, tj in zip(s, row):
            if tj.degree >= 0:
                f = f + multiply(sj, tj)
        cy.append(f)
        cof.append(tuple(row))
    return ExplicitPair(
        field,
        ambient_N,
        tuple(cy),
        tuple(s),
        cofactors=tuple(cof),
        label=f"random(seed={seed})",
        meta={"construction": "random", "seed": seed},
    )


CONSTRUCTIONS = ("fermat-sextic", "random")


def build_construction(name, ambient_N, cy_degrees, surface_degrees, field=None, seed=0) -> ExplicitPair:
    if name == "fermat-sextic":
        if ambient_N != FERMAT_N or tuple(cy_degrees) != (6,):
            raise ValidationError("fermat-sextic needs ambient 5 and cy_degrees 6")
        return fermat_sextic_pair(surface_degrees, field)
    if name == "random":
        if field is None:
            field = PrimeField(DEFAULT_PRIME)
        return random_pair(ambient_N, tuple(cy_degrees), tuple(surface_degrees), field, seed)
    raise ValidationError(f"unknown construction {name!r}; choose from {', '.join(CONSTRUCTIONS)}")
