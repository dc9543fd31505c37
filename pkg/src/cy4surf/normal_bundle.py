"""Sections of the normal bundle of a complete-intersection surface S inside a CY 4-fold X.

With S = V(s_1..s_k) and X = V(f_1..f_m), write f_i = sum_j s_j t_ij. Then
H^0(N_{S/X}) is the kernel of

    (+)_j (R/(s))_{d_j}  -->  (+)_i (R/(s))_{e_i},    (u_j) |--> (sum_j u_j t_ij mod (s))_i

Quotient pieces are handled by elimination on the degree-n piece of the ideal:
the echelon form's non-pivot monomials give a basis of (R/(s))_n, and reducing a
polynomial against the echelon rows gives its coordinates in that basis.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import FieldMismatch, NotInIdeal, RegularityViolation, ValidationError
from .fields import Field, PrimeField
from .hilbert import KoszulProfile, ideal_degree_matrix, koszul_hilbert_function, verify_regular_sequence
from .linalg import EchelonForm, ExactMatrix, kernel_dimension, solve
from .polyring import HomogeneousPolynomial, coefficient_vector, monomial_basis, multiply


def cofactor_solve(f: HomogeneousPolynomial, s: list[HomogeneousPolynomial]) -> list[HomogeneousPolynomial]:
    """Find t with f = sum_j s_j t_j; raises NotInIdeal when no such t exists."""
    F, n_vars, D = f.field, f.n_vars, f.degree
    for g in s:
        if g.field != F or g.n_vars != n_vars:
            raise FieldMismatch("f and the generators live in different rings")
    A = ideal_degree_matrix(s, D, n_vars=n_vars, field=F).transpose()
    x = solve(A, coefficient_vector(f))
    if x is None:
        raise NotInIdeal(f"the degree-{D} polynomial is not in the ideal generated by degrees {[g.degree for g in s]}")
    out = []
    pos = 0
    for g in s:
        basis = monomial_basis(n_vars, D - g.degree)
        block = x[pos : pos + len(basis)]
        pos += len(basis)
        out.append(HomogeneousPolynomial(F, n_vars, D - g.degree, dict(zip(basis, block))))
    return out


class GradedQuotientBasis:
    """A basis of (R/(s))_n by coset monomials, with reduction to coordinates."""

    def __init__(self, generators, degree, n_vars, field):
        self.degree = degree
        self.n_vars = n_vars
        self.field = field
        self.basis = monomial_basis(n_vars, degree) if degree >= 0 else ()
        if degree < 0:
            self.ideal_row_space = None
            self.coset_monomials = []
            return
        M = ideal_degree_matrix(generators, degree, n_vars=n_vars, field=field)
        self.ideal_row_space = EchelonForm(M)
        self.coset_monomials = [self.basis[c] for c in self.ideal_row_space.free_columns]

    def __len__(self):
        return len(self.coset_monomials)

    def coordinates(self, polys):
        """Coordinates of each polynomial (all of this degree) in the coset basis; one row per polynomial."""
        if not polys:
            return []
        if not self.coset_monomials:
            return [[] for _ in polys]
        vecs = [coefficient_vector(p) for p in polys]
        coords = self.ideal_row_space.coordinates(vecs)
        if isinstance(self.field, PrimeField):
            return [[int(v) for v in row] for row in np.asarray(coords)]
        return coords

    def reduce(self, poly):
        """Normal form of ``poly`` modulo the ideal, as a polynomial supported on coset monomials."""
        (row,) = self.coordinates([poly])
        return HomogeneousPolynomial(self.field, self.n_vars, self.degree, dict(zip(self.coset_monomials, row)))


def quotient_basis(s, n: int, n_vars: int | None = None, field: Field | None = None) -> GradedQuotientBasis:
    if s:
        n_vars, field = s[0].n_vars, s[0].field
    Q = GradedQuotientBasis(s, n, n_vars, field)
    if s:
        expected = koszul_hilbert_function(KoszulProfile(n_vars - 1, tuple(g.degree for g in s)), n)
        if len(Q) != expected:
            raise RegularityViolation(
                f"dim (R/(s))_{n} = {len(Q)} but a regular sequence of these degrees gives {expected}"
            )
    return Q


@dataclass(frozen=True)
class ExplicitPair:
    """Explicit equations for S inside X, optionally with cofactors f_i = sum_j s_j t_ij."""

    field: Field
    ambient_N: int
    cy_polys: tuple
    surface_polys: tuple
    cofactors: tuple | None = None
    label: str = ""
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "cy_polys", tuple(self.cy_polys))
        object.__setattr__(self, "surface_polys", tuple(self.surface_polys))
        N = self.ambient_N
        for g in self.cy_polys + self.surface_polys:
            if g.field != self.field:
                raise FieldMismatch(f"polynomial over {g.field}, pair over {self.field}")
            if g.n_vars != N + 1:
                raise ValidationError(f"polynomial in {g.n_vars} variables, expected {N + 1}")
        if len(self.cy_polys) != N - 4:
            raise ValidationError(f"need {N - 4} Calabi-Yau equations, got {len(self.cy_polys)}")
        if sum(self.cy_degrees) != N + 1:
            raise ValidationError(f"Calabi-Yau degree sum {sum(self.cy_degrees)} != N+1 = {N + 1}")
        if len(self.surface_polys) != N - 2:
            raise ValidationError(f"need {N - 2} surface equations, got {len(self.surface_polys)}")
        if self.cofactors is not None:
            cof = tuple(tuple(row) for row in self.cofactors)
            object.__setattr__(self, "cofactors", cof)
            self._check_cofactors(cof)

    @property
    def cy_degrees(self):
        return tuple(g.degree for g in self.cy_polys)

    @property
    def surface_degrees(self):
        return tuple(g.degree for g in self.surface_polys)

    @property
    def n_vars(self):
        return self.ambient_N + 1

    def _check_cofactors(self, cof):
        if len(cof) != len(self.cy_polys) or any(len(row) != len(self.surface_polys) for row in cof):
            raise ValidationError("cofactor matrix has the wrong shape")
        for f, row in zip(self.cy_polys, cof):
            total = HomogeneousPolynomial.zero(self.field, self.n_vars, f.degree)
            for s, t in zip(self.surface_polys, row):
                if t.is_zero():
                    continue
                if t.degree != f.degree - s.degree:
                    raise ValidationError(f"cofactor of degree {t.degree}, expected {f.degree - s.degree}")
                total = total + multiply(s, t)
            if total != f:
                raise NotInIdeal("f_i - sum_j s_j t_ij is not identically zero")

    def with_cofactors(self):
        """Return a copy carrying solved cofactors (self if already present)."""
        if self.cofactors is not None:
            return self
        cof = tuple(tuple(cofactor_solve(f, list(self.surface_polys))) for f in self.cy_polys)
        return replace(self, cofactors=cof)

    def is_regular(self, up_to_degree: int | None = None) -> bool:
        if up_to_degree is None:
            up_to_degree = max(sum(self.surface_degrees), max(self.cy_degrees))
        return verify_regular_sequence(list(self.surface_polys), up_to_degree)


def obstruction_matrix(pair: ExplicitPair) -> ExactMatrix:
    """Matrix of (u_j) -> (sum_j u_j t_ij mod (s))_i in coset-monomial coordinates."""
    pair = pair.with_cofactors()
    s = list(pair.surface_polys)
    F, n_vars = pair.field, pair.n_vars
    pieces = {}
    for deg in set(pair.surface_degrees) | set(pair.cy_degrees):
        pieces[deg] = quotient_basis(s, deg)
    col_offsets, pos = [], 0
    for d in pair.surface_degrees:
        col_offsets.append(pos)
        pos += len(pieces[d])
    ncols = pos
    row_offsets, pos = [], 0
    for e in pair.cy_degrees:
        row_offsets.append(pos)
        pos += len(pieces[e])
    nrows = pos
    entries = {}
    for i, e in enumerate(pair.cy_degrees):
        target = pieces[e]
        for j, d in enumerate(pair.surface_degrees):
            t = pair.cofactors[i][j]
            if t.is_zero() or t.degree != e - d:
                continue
            sources = pieces[d].coset_monomials
            images = [multiply(HomogeneousPolynomial.monomial(F, u), t) for u in sources]
            coords = target.coordinates(images)
            for k, row in enumerate(coords):
                for r, v in enumerate(row):
                    if not F.is_zero(v):
                        entries[(row_offsets[i] + r, col_offsets[j] + k)] = v
    return ExactMatrix(F, nrows, ncols, entries)


def h0_normal(pair: ExplicitPair) -> int:
    """h^0(N_{S/X}) as the kernel dimension of the obstruction matrix."""
    return kernel_dimension(obstruction_matrix(pair))
