"""Exact invariants of complete-intersection surfaces in complete-intersection Calabi-Yau 4-folds."""
from .chern import ChernElement, SurfaceDegrees, chern_summary, chi_normal_bundle, chi_structure_sheaf, gamma_squared
from .config import RunConfig, parse_config
from .constructions import fermat_sextic_pair, random_pair
from .errors import Cy4SurfError
from .fields import QQ, ExtensionField, PrimeField, Rationals, invert, parse_field, root_of_minus_one
from .hilbert import KoszulProfile, hilbert_polynomial, koszul_hilbert_function, verify_regular_sequence
from .invariants import InvariantReport, full_report, is_rigid_by_degree, rho_gamma, rigid_table, virtual_dimension
from .linalg import ExactMatrix, kernel_dimension, rank
from .normal_bundle import ExplicitPair, cofactor_solve, h0_normal, obstruction_matrix, quotient_basis
from .polyring import HomogeneousPolynomial
from .symplectic import (
    LagrangianInput,
    k3_symmetric_square_rvd,
    lagrangian_rho,
    lagrangian_rvd,
    non_semiregular_by_parity,
    product_k3_rho,
)

__version__ = "0.1.0"

__all__ = [
    "ChernElement",
    "Cy4SurfError",
    "ExactMatrix",
    "ExplicitPair",
    "ExtensionField",
    "HomogeneousPolynomial",
    "InvariantReport",
    "KoszulProfile",
    "LagrangianInput",
    "PrimeField",
    "QQ",
    "Rationals",
    "RunConfig",
    "SurfaceDegrees",
    "chern_summary",
    "chi_normal_bundle",
    "chi_structure_sheaf",
    "cofactor_solve",
    "fermat_sextic_pair",
    "full_report",
    "gamma_squared",
    "h0_normal",
    "hilbert_polynomial",
    "invert",
    "is_rigid_by_degree",
    "k3_symmetric_square_rvd",
    "kernel_dimension",
    "koszul_hilbert_function",
    "lagrangian_rho",
    "lagrangian_rvd",
    "non_semiregular_by_parity",
    "obstruction_matrix",
    "parse_config",
    "parse_field",
    "product_k3_rho",
    "quotient_basis",
    "random_pair",
    "rank",
    "rho_gamma",
    "rigid_table",
    "root_of_minus_one",
    "verify_regular_sequence",
    "virtual_dimension",
]
