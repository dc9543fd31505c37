"""Closed forms for surfaces in holomorphic-symplectic 4-folds.

For a lagrangian surface S in X with i*: H^{1,1}(X) -> H^{1,1}(S),

    rvd = chi(Omega^1_S)/2 + rk(i*)/2,    chi(Omega^1_S) = h10 - h11 + h21
    rho = rk(i*)

Hodge numbers are inputs; nothing here computes them.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError


@dataclass(frozen=True)
class LagrangianInput:
    h10: int
    h11: int
    h21: int
    rank_istar: int

    def __post_init__(self):
        for name in ("h10", "h11", "h21", "rank_istar"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ValidationError(f"{name} must be a non-negative integer, got {v!r}")
        if self.rank_istar > self.h11:
            raise ValidationError(f"rank of i* ({self.rank_istar}) exceeds h11 ({self.h11})")

    @property
    def chi_cotangent(self) -> int:
        return self.h10 - self.h11 + self.h21

    @property
    def coker_dim(self) -> int:
        return self.h11 - self.rank_istar


def lagrangian_rvd(inp: LagrangianInput) -> Fraction:
    return Fraction(inp.chi_cotangent, 2) + Fraction(inp.rank_istar, 2)


def lagrangian_rho(inp: LagrangianInput) -> int:
    return inp.rank_istar


def non_semiregular_by_parity(inp: LagrangianInput) -> bool:
    """Semi-regularity fails when dim coker(i*) is odd or b_1(S) < dim coker(i*).

    Either condition makes rvd = h10 - coker/2 a half-integer or negative, so it
    cannot equal h^0(N). For even h11 the parity of the cokernel is the parity of rk(i*).
    """
    return inp.coker_dim % 2 == 1 or 2 * inp.h10 < inp.coker_dim


def k3_symmetric_square_rvd(g: int) -> Fraction:
    """rvd for the class of C^[2] in S^[2], C a genus g curve on a K3 surface."""
    if g < 0:
        raise ValidationError("genus must be non-negative")
    return Fraction(-((g - 1) ** 2), 2) + (Fraction(1, 2) if g == 0 else 1)


def product_k3_rho() -> int:
    """rho for gamma = eta_1 x eta_2 on a product of two K3 surfaces, both classes nonzero."""
    return 2


PRESETS = {
    "schoen": LagrangianInput(h10=4, h11=12, h21=4, rank_istar=12),
    "lagrangian-plane": LagrangianInput(h10=0, h11=1, h21=0, rank_istar=1),
    "abelian-fibre": LagrangianInput(h10=2, h11=4, h21=2, rank_istar=1),
}


def preset_summary(name: str) -> dict:
    inp = PRESETS[name]
    return {
        "preset": name,
        "h10": inp.h10,
        "h11": inp.h11,
        "h21": inp.h21,
        "rank_istar": inp.rank_istar,
        "rvd": lagrangian_rvd(inp),
        "rho": lagrangian_rho(inp),
        "non_semiregular_by_parity": non_semiregular_by_parity(inp),
    }
