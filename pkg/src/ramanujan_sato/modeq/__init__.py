"""Modular equations Psi_n(X, Y) between x(tau) and x(n tau)."""

from .bareiss import bareiss_echelon, nullspace, primitive, rank
from .core import (
    GaloisStabilityError,
    ModularEquationError,
    UnsupportedFactorError,
    conjugates,
    diagonal_roots,
    elementary_symmetric,
    find_modular_equation,
    psi_from_symmetric,
    root_matches,
    symmetric_function_check,
    verify_annihilation,
)
from .equation import ModularEquation, psi_degree

__all__ = [
    "GaloisStabilityError",
    "ModularEquation",
    "ModularEquationError",
    "UnsupportedFactorError",
    "bareiss_echelon",
    "conjugates",
    "diagonal_roots",
    "elementary_symmetric",
    "find_modular_equation",
    "nullspace",
    "primitive",
    "psi_degree",
    "psi_from_symmetric",
    "rank",
    "root_matches",
    "symmetric_function_check",
    "verify_annihilation",
]
