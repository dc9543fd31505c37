"""Intersection numbers on a complete-intersection surface S in P^N.

Every class that appears is a polynomial in the hyperplane class h, so the
computations live in Q[h]/(h^3) together with one number, deg S = prod d_j,
which is the integral of h^2 over S.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import ConsistencyFailure, NonIntegerChi, NonUnitLeadingTerm, ValidationError


@dataclass(frozen=True)
class ChernElement:
    """a0 + a1*h + a2*h^2 in Q[h]/(h^3); ``surface_degree`` is the integral of h^2."""

    a0: Fraction
    a1: Fraction
    a2: Fraction
    surface_degree: int = 1

    def __post_init__(self):
        for name in ("a0", "a1", "a2"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.surface_degree < 1:
            raise ValueError("surface degree must be positive")

    @classmethod
    def one(cls, surface_degree=1):
        return cls(1, 0, 0, surface_degree)

    @property
    def coeffs(self):
        return (self.a0, self.a1, self.a2)

    def _same_surface(self, other):
        if self.surface_degree != other.surface_degree:
            raise ValueError("elements live on surfaces of different degree")

    def __add__(self, other):
        self._same_surface(other)
        return ChernElement(self.a0 + other.a0, self.a1 + other.a1, self.a2 + other.a2, self.surface_degree)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return ChernElement(c * self.a0, c * self.a1, c * self.a2, self.surface_degree)

    def __mul__(self, other):
        if not isinstance(other, ChernElement):
            return self.scale(other)
        self._same_surface(other)
        a, b = self, other
        return ChernElement(
            a.a0 * b.a0,
            a.a0 * b.a1 + a.a1 * b.a0,
            a.a0 * b.a2 + a.a1 * b.a1 + a.a2 * b.a0,
            self.surface_degree,
        )

    __rmul__ = __mul__

    def inverse(self):
        """(1 + a h + b h^2)^-1 = 1 - a h + (a^2 - b) h^2, after normalizing a0."""
        if self.a0 == 0:
            raise NonUnitLeadingTerm("constant term is zero")
        a, b = self.a1 / self.a0, self.a2 / self.a0
        return ChernElement(1, -a, a * a - b, self.surface_degree).scale(1 / self.a0)

    def __truediv__(self, other):
        return chern_quotient(self, other)

    def part(self, k):
        return self.coeffs[k]

    def integrate(self):
        """Integral over S: only the h^2 part contributes."""
        return self.a2 * self.surface_degree

    def with_surface_degree(self, surface_degree):
        return ChernElement(self.a0, self.a1, self.a2, surface_degree)

    def __str__(self):
        return f"{self.a0} + {self.a1}*h + {self.a2}*h^2"


def total_chern_sum_of_lines(degrees, surface_degree: int = 1) -> ChernElement:
    """c(O(d_1) + ... + O(d_k)) = prod (1 + d_i h), truncated."""
    c = ChernElement.one(surface_degree)
    for d in degrees:
        c = c * ChernElement(1, d, 0, surface_degree)
    return c


def chern_quotient(c_total: ChernElement, c_part: ChernElement) -> ChernElement:
    """c(E) / c(F) in the truncated ring; the divisor must start with 1."""
    if c_part.a0 != 1:
        raise NonUnitLeadingTerm(f"divisor {c_part} does not start with 1")
    return c_total * c_part.inverse()


def chern_character(rank: int, c: ChernElement) -> ChernElement:
    """ch = rk + c1 + (c1^2 - 2 c2)/2 for a bundle with total Chern class c."""
    c1, c2 = c.a1, c.a2
    return ChernElement(rank, c1, (c1 * c1 - 2 * c2) / 2, c.surface_degree)


def todd_class(c_tangent: ChernElement) -> ChernElement:
    """td = 1 + c1/2 + (c1^2 + c2)/12."""
    c1, c2 = c_tangent.a1, c_tangent.a2
    return ChernElement(1, c1 / 2, (c1 * c1 + c2) / 12, c_tangent.surface_degree)


@dataclass(frozen=True)
class SurfaceDegrees:
    """A complete-intersection surface (d_j) inside a complete-intersection CY 4-fold (e_i) in P^N."""

    ambient_N: int
    cy_degrees: tuple
    surface_degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "cy_degrees", tuple(int(e) for e in self.cy_degrees))
        object.__setattr__(self, "surface_degrees", tuple(int(d) for d in self.surface_degrees))
        N = self.ambient_N
        if any(x < 1 for x in self.cy_degrees + self.surface_degrees):
            raise ValidationError("all degrees must be >= 1")
        if len(self.cy_degrees) != N - 4:
            raise ValidationError(f"a 4-fold in P^{N} needs {N - 4} equations, got {len(self.cy_degrees)}")
        if sum(self.cy_degrees) != N + 1:
            raise ValidationError(
                f"Calabi-Yau degree sum: sum of e_i is {sum(self.cy_degrees)}, must equal N+1 = {N + 1}"
            )
        if len(self.surface_degrees) != N - 2:
            raise ValidationError(f"a surface in P^{N} needs {N - 2} equations, got {len(self.surface_degrees)}")

    @property
    def degree(self):
        return prod(self.surface_degrees)


def tangent_chern_class(cfg: SurfaceDegrees) -> ChernElement:
    """c(T_S) = (1 + h)^(N+1) / prod (1 + d_j h)."""
    deg = cfg.degree
    return chern_quotient(
        total_chern_sum_of_lines([1] * (cfg.ambient_N + 1), deg),
        total_chern_sum_of_lines(cfg.surface_degrees, deg),
    )


def normal_chern_class(cfg: SurfaceDegrees) -> ChernElement:
    """c(N_{S/X}) from 0 -> N_{S/X} -> N_{S/P} -> N_{X/P}|_S -> 0."""
    deg = cfg.degree
    return chern_quotient(
        total_chern_sum_of_lines(cfg.surface_degrees, deg),
        total_chern_sum_of_lines(cfg.cy_degrees, deg),
    )


def canonical_class_coefficient(cfg: SurfaceDegrees) -> int:
    """K_S = (sum d_j - N - 1) h."""
    return sum(cfg.surface_degrees) - cfg.ambient_N - 1


def _as_int(value, what):
    if Fraction(value).denominator != 1:
        raise NonIntegerChi(f"{what} = {value} is not an integer")
    return int(value)


def gamma_squared(cfg: SurfaceDegrees) -> int:
    """Self-intersection of [S] in X, i.e. the degree of c_2(N_{S/X})."""
    return _as_int(normal_chern_class(cfg).integrate(), "gamma^2")


def noether_data(cfg: SurfaceDegrees) -> dict:
    cT = tangent_chern_class(cfg)
    deg = cfg.degree
    K2 = Fraction(canonical_class_coefficient(cfg) ** 2 * deg)
    c2 = cT.integrate()
    return {"K2": K2, "c2": c2}


def chi_structure_sheaf(cfg: SurfaceDegrees) -> int:
    """chi(O_S) by Noether's formula (K^2 + c_2)/12."""
    data = noether_data(cfg)
    return _as_int((data["K2"] + data["c2"]) / 12, "chi(O_S)")


def chi_normal_bundle_hrr(cfg: SurfaceDegrees) -> int:
    """chi(N_{S/X}) as the integral of ch(N) td(S)."""
    ch = chern_character(2, normal_chern_class(cfg))
    td = todd_class(tangent_chern_class(cfg))
    return _as_int((ch * td).integrate(), "chi(N)")


def chi_normal_bundle(cfg: SurfaceDegrees) -> int:
    """chi(N_{S/X}) = 2 chi(O_S) - gamma^2, checked against Riemann-Roch."""
    shortcut = 2 * chi_structure_sheaf(cfg) - gamma_squared(cfg)
    direct = chi_normal_bundle_hrr(cfg)
    if shortcut != direct:
        raise ConsistencyFailure(f"chi(N): 2chi - gamma^2 = {shortcut} but HRR gives {direct}")
    return shortcut


def chern_summary(cfg: SurfaceDegrees) -> dict:
    """Everything the ``chern`` command prints."""
    data = noether_data(cfg)
    return {
        "c_normal": normal_chern_class(cfg),
        "c_tangent": tangent_chern_class(cfg),
        "K2": int(data["K2"]),
        "c2": int(data["c2"]),
        "chi_OS": chi_structure_sheaf(cfg),
        "gamma_sq": gamma_squared(cfg),
        "chi_N": chi_normal_bundle(cfg),
    }
