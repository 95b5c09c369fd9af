"""Coarse graph parameters beyond the layering/decomposition machinery."""

from .bottleneck import bottleneck_constant
from .mccarty import (
    SeparatorCertificate,
    balanced_separator_for_set,
    disk_separates_all_paths,
    mccarty_width,
    mccarty_width_k,
    mcw_upper_from_separators,
    recertify_separator,
)
from .families import FamilyCheckResult, family_check, interception_radius
from .cycles import (
    CycleEnumeration,
    LoadedCycle,
    bridging_geodesic_constant,
    cycle_bridging_constant,
    enumerate_simple_cycles,
    glc_oracle,
    loaded_cycle_geodesic,
)
from .adt import adt_oracle, adt_upper
from .fatminor import (
    FatMinorViolation,
    FatMinorWitness,
    fat_minor_construct,
    fat_minor_verify,
)

__all__ = [
    "bottleneck_constant",
    "SeparatorCertificate",
    "balanced_separator_for_set",
    "disk_separates_all_paths",
    "mccarty_width",
    "mccarty_width_k",
    "mcw_upper_from_separators",
    "recertify_separator",
    "FamilyCheckResult",
    "family_check",
    "interception_radius",
    "CycleEnumeration",
    "LoadedCycle",
    "bridging_geodesic_constant",
    "cycle_bridging_constant",
    "enumerate_simple_cycles",
    "glc_oracle",
    "loaded_cycle_geodesic",
    "adt_oracle",
    "adt_upper",
    "FatMinorViolation",
    "FatMinorWitness",
    "fat_minor_construct",
    "fat_minor_verify",
]
