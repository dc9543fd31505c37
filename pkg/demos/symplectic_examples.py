"""rvd and rho for lagrangian surfaces from their Hodge numbers."""
from fractions import Fraction

from cy4surf.symplectic import (
    PRESETS,
    LagrangianInput,
    k3_symmetric_square_rvd,
    lagrangian_rvd,
    non_semiregular_by_parity,
    product_k3_rho,
)

for name, inp in PRESETS.items():
    flag = "not semi-regular" if non_semiregular_by_parity(inp) else "numerical test inconclusive"
    print(f"{name:<18} chi(Omega^1)={inp.chi_cotangent:3d}  rk(i*)={inp.rank_istar:2d}  rvd={lagrangian_rvd(inp)}  ({flag})")

# a half-integer rvd rules out semi-regularity at once
odd = LagrangianInput(h10=1, h11=3, h21=1, rank_istar=2)
print(f"\nh10=1, h11=3, rk=2: rvd={lagrangian_rvd(odd)}, not semi-regular={non_semiregular_by_parity(odd)}")

print("\nC^[2] in S^[2] for a genus g curve C on a K3 surface S")
for g in range(6):
    print(f"  g={g}: rvd={k3_symmetric_square_rvd(g)}")

rho = product_k3_rho()
print(f"\nproduct class on K3 x K3: rho={rho}, so rvd - vd = {Fraction(rho, 2)}")
