from .elimination import (
    affine_rank,
    column_rank,
    integer_determinant,
    integer_rank,
    rational_nullspace,
    solve_rational,
)
from .matrix import IntegerMatrix
from .matroid import (
    Circuit,
    DependencySet,
    MinimalDependency,
    matroid_bases,
    matroid_circuits,
    minimal_dependencies,
)
from .smith import (
    SNFResult,
    determinantal_divisors,
    divisors_from_minors,
    hermite_normal_form,
    integer_kernel_basis,
    saturation_basis,
    smith_normal_form,
)
from .systems import gcd_minor_criterion, solve_integral_system
from .torsion import (
    TorsionVector,
    forall_sign_vectors_integral,
    parity_criterion,
    torsion_vectors,
)
from .unimodular import TUResult, is_totally_unimodular, predicted_minors

__all__ = [
    "IntegerMatrix",
    # Smith / Hermite
    "SNFResult",
    "smith_normal_form",
    "hermite_normal_form",
    "integer_kernel_basis",
    "saturation_basis",
    "determinantal_divisors",
    "divisors_from_minors",
    # Elimination
    "integer_determinant",
    "integer_rank",
    "column_rank",
    "affine_rank",
    "rational_nullspace",
    "solve_rational",
    # Systems
    "solve_integral_system",
    "gcd_minor_criterion",
    # Matroid
    "Circuit",
    "DependencySet",
    "MinimalDependency",
    "matroid_circuits",
    "matroid_bases",
    "minimal_dependencies",
    # Torsion
    "TorsionVector",
    "torsion_vectors",
    "parity_criterion",
    "forall_sign_vectors_integral",
    # Total unimodularity
    "TUResult",
    "is_totally_unimodular",
    "predicted_minors",
]
