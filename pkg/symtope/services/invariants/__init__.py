from .counting import (
    FibreData,
    ehrhart_counts,
    fibre_data,
    hilbert_counts,
    idp_witnesses,
)
from .ehrhart import (
    ENUMERATION,
    FIBRE,
    EhrhartCalculator,
    HStarVector,
    counts_from_hstar,
    ehrhart_calculator,
    ehrhart_hstar,
    hilbert_numerator,
    numerator_from_counts,
)
from .idp import IDPReport, SpanningReport, idp_report, spanning_report
from .reflexivity import (
    ALL_DIVISORS_ONE,
    POLAR_INTEGRALITY,
    Q3_TORSION,
    ROUTES,
    TORSION_PARITY,
    ForestReport,
    ForestVerdict,
    ReflexivityCalculator,
    ReflexivityVerdict,
    dual_dilation_check,
    is_reflexive,
    reflexivity_by_topology,
    reflexivity_calculator,
    reflexivity_via_forests,
)
from .sweep import SweepEntry, sweep_subcomplexes

__all__ = [
    "HStarVector",
    "IDPReport",
    "SpanningReport",
    "ReflexivityVerdict",
    "ForestReport",
    "ForestVerdict",
    "SweepEntry",
    "FibreData",
    # Ehrhart / Hilbert
    "EhrhartCalculator",
    "ehrhart_calculator",
    "ehrhart_hstar",
    "hilbert_numerator",
    "numerator_from_counts",
    "counts_from_hstar",
    "ehrhart_counts",
    "hilbert_counts",
    "fibre_data",
    "FIBRE",
    "ENUMERATION",
    # IDP
    "spanning_report",
    "idp_report",
    "idp_witnesses",
    # Reflexivity
    "ReflexivityCalculator",
    "reflexivity_calculator",
    "is_reflexive",
    "reflexivity_by_topology",
    "reflexivity_via_forests",
    "dual_dilation_check",
    "ALL_DIVISORS_ONE",
    "TORSION_PARITY",
    "Q3_TORSION",
    "POLAR_INTEGRALITY",
    "ROUTES",
    "sweep_subcomplexes",
]
