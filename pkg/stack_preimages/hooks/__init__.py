from stack_preimages.hooks.vhc import (
    CanonicalData,
    Coloring,
    Hook,
    ValidHookConfiguration,
    canonical_vhc,
    compositions_by_enumeration,
    descent_distribution,
    enumerate_vhcs,
    fertility,
    fertility_by_descents,
    fertility_by_peaks,
    induced_coloring,
    induced_composition,
    is_valid_configuration,
    layered_min_composition,
    layered_upset,
    peak_distribution,
    phi_layered,
    valid_compositions,
)

__all__ = [
    "CanonicalData",
    "Coloring",
    "Hook",
    "ValidHookConfiguration",
    "canonical_vhc",
    "compositions_by_enumeration",
    "descent_distribution",
    "enumerate_vhcs",
    "fertility",
    "fertility_by_descents",
    "fertility_by_peaks",
    "induced_coloring",
    "induced_composition",
    "is_valid_configuration",
    "layered_min_composition",
    "layered_upset",
    "peak_distribution",
    "phi_layered",
    "valid_compositions",
]
