from stack_preimages.enumeration.numbers import (
    catalan,
    comp_leq,
    comp_set,
    downset_count,
    fine,
    narayana,
    psi,
    psi_inverse,
    thm_formula,
    vee,
)
from stack_preimages.enumeration.series import (
    RationalSeries,
    gf_coefficients,
    is_real_rooted,
    series_compose,
    series_sqrt,
)

__all__ = [
    "RationalSeries",
    "catalan",
    "comp_leq",
    "comp_set",
    "downset_count",
    "fine",
    "gf_coefficients",
    "is_real_rooted",
    "narayana",
    "psi",
    "psi_inverse",
    "series_compose",
    "series_sqrt",
    "thm_formula",
    "vee",
]
