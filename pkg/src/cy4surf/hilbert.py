"""Hilbert functions of complete intersections in P^N.

For a regular sequence of degrees d_1..d_k in R = k[x_0..x_N] the Koszul complex
is a free resolution of R/(s), so

    dim (R/(s))_n = sum over J subset of {1..k} of (-1)^|J| * C(N + n - d_J, N)

with the truncated binomial (zero when the top is below N). Replacing the
truncated binomial by the polynomial one gives the Hilbert polynomial.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from .errors import RingMismatch
from .linalg import ExactMatrix, rank
from .polyring import HomogeneousPolynomial, dim_graded_piece, monomial_basis, monomial_index


@dataclass(frozen=True)
class KoszulProfile:
    ambient_N: int
    degrees: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(int(d) for d in self.degrees)))
        if self.ambient_N < 1:
            raise ValueError("ambient dimension must be positive")
        if any(d < 1 for d in self.degrees):
            raise ValueError("degrees must be positive")
        if len(self.degrees) > self.ambient_N:
            raise ValueError("more equations than the ambient dimension")

    @property
    def n_vars(self):
        return self.ambient_N + 1

    @property
    def dimension(self):
        return self.ambient_N - len(self.degrees)

    def subset_sums(self):
        for size in range(len(self.degrees) + 1):
            for J in combinations(self.degrees, size):
                yield size, sum(J)


def koszul_hilbert_function(P: KoszulProfile, n: int) -> int:
    if n < 0:
        return 0
    N = P.ambient_N
    total = 0
    for size, dJ in P.subset_sums():
        top = N + n - dJ
        if top >= N:
            total += (-1) ** size * comb(top, N)
    return total


@dataclass(frozen=True)
class RationalPolynomial:
    """Univariate polynomial with Fraction coefficients, lowest degree first."""

    coeffs: tuple

    def __post_init__(self):
        c = [Fraction(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, t):
        t = Fraction(t)
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RationalPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other):
        if not isinstance(other, RationalPolynomial):
            return RationalPolynomial(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(tuple(out))

    __rmul__ = __mul__

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            elif mono:
                s = f"{c}*{mono}" if c.denominator == 1 else f"({c})*{mono}"
            else:
                s = str(c)
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")


@lru_cache(maxsize=None)
def binomial_polynomial(shift: int, N: int) -> RationalPolynomial:
    """C(t + shift, N) as a polynomial in t."""
    poly = RationalPolynomial((1,))
    for k in range(N):
        poly = poly * RationalPolynomial((shift - k, 1))
    return poly * Fraction(1, factorial(N))


def hilbert_polynomial(P: KoszulProfile) -> RationalPolynomial:
    N = P.ambient_N
    # signed multiplicity of each subset sum
    weights = Counter()
    for size, dJ in P.subset_sums():
        weights[dJ] += (-1) ** size
    total = RationalPolynomial(())
    for dJ in sorted(weights):
        if weights[dJ]:
            total = total + binomial_polynomial(N - dJ, N) * weights[dJ]
    return total


# -- brute force graded pieces --------------------------------------------------------


def _check_ring(generators):
    if not generators:
        return
    f0 = generators[0]
    for g in generators[1:]:
        if g.field != f0.field or g.n_vars != f0.n_vars:
            raise RingMismatch("generators live in different rings")


def ideal_degree_matrix(generators, n: int, n_vars=None, field=None) -> ExactMatrix:
    """Rows: coefficient vectors of m * s_j for every monomial m with deg(m * s_j) = n."""
    _check_ring(generators)
    if generators:
        n_vars, field = generators[0].n_vars, generators[0].field
    index = monomial_index(n_vars, n)
    entries = {}
    row = 0
    for s in generators:
        for m in monomial_basis(n_vars, n - s.degree):
            for mono, c in s.terms.items():
                entries[(row, index[tuple(a + b for a, b in zip(m, mono))])] = c
            row += 1
    return ExactMatrix(field, row, len(index), entries)


def graded_quotient_dimension(generators, n: int) -> int:
    """dim (R/(generators))_n by linear algebra on the degree-n piece."""
    _check_ring(generators)
    n_vars = generators[0].n_vars
    if n < 0:
        return 0
    M = ideal_degree_matrix(generators, n)
    return dim_graded_piece(n_vars, n) - rank(M)


def verify_regular_sequence(generators: list[HomogeneousPolynomial], up_to_degree: int | None = None) -> bool:
    """True iff the graded dimensions of R/(s) match the Koszul prediction in degrees <= up_to_degree."""
    _check_ring(generators)
    if not generators:
        return True
    n_vars = generators[0].n_vars
    if len(generators) > n_vars - 1:
        return False
    if any(g.is_zero() for g in generators):
        return False
    profile = KoszulProfile(n_vars - 1, tuple(g.degree for g in generators))
    if up_to_degree is None:
        up_to_degree = sum(profile.degrees)
    for n in range(min(profile.degrees), up_to_degree + 1):
        if graded_quotient_dimension(generators, n) != koszul_hilbert_function(profile, n):
            return False
    return True
