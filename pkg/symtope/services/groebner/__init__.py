from .basis import (
    TYPE_1A,
    TYPE_1B,
    TYPE_2,
    TYPE_3,
    TYPE_4,
    Binomial,
    GroebnerBasis,
    GroebnerCalculator,
    evaluate,
    groebner_basis,
    groebner_calculator,
    is_toric_member,
    saturate,
)
from .diagnostics import (
    DichotomyBranch,
    DichotomyReport,
    GBDiagnostics,
    gb_diagnostics,
    initial_ideal_dichotomy,
    rut_obstruction,
)
from .monomials import DegRevLex, Monomial, ToricVariable, degrevlex
from .reduction import (
    TrialReport,
    division_closure_trials,
    is_standard,
    normal_form,
    standard_monomial_counts,
)
from .triangulation import Triangulation, triangulation_from_gb

__all__ = [
    "Binomial",
    "GroebnerBasis",
    "Monomial",
    "ToricVariable",
    "DegRevLex",
    "degrevlex",
    "Triangulation",
    "TYPE_1A",
    "TYPE_1B",
    "TYPE_2",
    "TYPE_3",
    "TYPE_4",
    # Basis
    "GroebnerCalculator",
    "groebner_calculator",
    "groebner_basis",
    "saturate",
    "evaluate",
    "is_toric_member",
    # Reduction
    "normal_form",
    "is_standard",
    "division_closure_trials",
    "standard_monomial_counts",
    "TrialReport",
    # Diagnostics
    "gb_diagnostics",
    "GBDiagnostics",
    "rut_obstruction",
    "initial_ideal_dichotomy",
    "DichotomyReport",
    "DichotomyBranch",
    # Triangulation
    "triangulation_from_gb",
]
