"""Exact arithmetic for indecomposable totally positive integers in real
quadratic and totally real biquadratic fields."""

from .biquadstruct import (
    Cone,
    UnitGroupInfo,
    cone_decomposition,
    cones_from_generators,
    has_extra_units,
    kubota_delta,
    kubota_square_test,
    parallelepiped_points,
    sqrt_in_field,
    totally_positive_units,
)
from .census import (
    GrowthReport,
    TableRow,
    biquadratic_fields,
    brute_biquadratic_fields,
    count_multiquadratic,
    count_quadratic,
    growth_check,
    log_ratio_string,
    multiquadratic_groups,
    squarefree_numbers,
    table_row,
    table_rows,
)
from .contfrac import (
    PeriodicCF,
    best_one_sided_approximations,
    brute_one_sided_approximations,
    cf_expand,
    fundamental_unit,
    odd_partial_quotient_max,
    omega,
    totally_positive_fundamental_unit,
)
from .exactalg import (
    BiquadElem,
    BiquadField,
    QuadElem,
    Rat,
    is_squarefree,
    sign_sqrt_comb,
    squarefree_part,
)
from .families import Family, FamilyReport, family, family_cone_contents, verify_family
from .indecenum import (
    BudgetExceeded,
    IndecResult,
    OracleReport,
    PreservationReport,
    crm_constant,
    decomposition_witness,
    indecomposables,
    is_indecomposable,
    oracle_indecomposables,
    preservation_check,
    rank_upper_bound,
    small_embedding_window,
)
from .quadindec import (
    decomposition_witness_quad,
    iota_quad,
    is_indecomposable_quad,
    quad_indecomposables,
    windowed_brute_check,
)

__version__ = "0.1.0"

__all__ = [
    "BiquadElem",
    "BiquadField",
    "BudgetExceeded",
    "Cone",
    "Family",
    "FamilyReport",
    "GrowthReport",
    "IndecResult",
    "OracleReport",
    "PeriodicCF",
    "PreservationReport",
    "QuadElem",
    "Rat",
    "TableRow",
    "UnitGroupInfo",
    "best_one_sided_approximations",
    "biquadratic_fields",
    "brute_biquadratic_fields",
    "brute_one_sided_approximations",
    "cf_expand",
    "cone_decomposition",
    "cones_from_generators",
    "count_multiquadratic",
    "count_quadratic",
    "crm_constant",
    "decomposition_witness",
    "decomposition_witness_quad",
    "family",
    "family_cone_contents",
    "fundamental_unit",
    "growth_check",
    "has_extra_units",
    "indecomposables",
    "iota_quad",
    "is_indecomposable",
    "is_indecomposable_quad",
    "is_squarefree",
    "kubota_delta",
    "kubota_square_test",
    "log_ratio_string",
    "multiquadratic_groups",
    "odd_partial_quotient_max",
    "omega",
    "oracle_indecomposables",
    "parallelepiped_points",
    "preservation_check",
    "quad_indecomposables",
    "rank_upper_bound",
    "sign_sqrt_comb",
    "small_embedding_window",
    "sqrt_in_field",
    "squarefree_numbers",
    "squarefree_part",
    "table_row",
    "table_rows",
    "totally_positive_fundamental_unit",
    "totally_positive_units",
    "verify_family",
]
