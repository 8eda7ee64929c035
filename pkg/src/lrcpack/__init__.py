"""Locally repairable systematic codes built from combinatorial packings."""

from .codes import (
    Codeword,
    SystematicCode,
    code_new,
    encode,
    erase,
    erase_and_repair,
    mds_check,
    min_distance,
    rs_systematic,
    update_efficiency,
)
from .constructions import construction_a, construction_b, pyramid_special_case
from .designs import (
    DifferenceMatrix,
    Packing,
    ResolvablePacking,
    dm_build,
    dm_to_resolvable,
    dm_validate,
    is_regular,
    packing_validate,
    resolvable_validate,
)
from .gf import FieldElement, FieldSpec, field_new
from .locality import (
    LocalityReport,
    bound_c,
    bound_i,
    classify_optimal,
    extract_packing,
    n1_conditions,
    theorem3_budget,
    verify_locality,
)

__version__ = "0.1.0"

__all__ = [
    "Codeword",
    "DifferenceMatrix",
    "FieldElement",
    "FieldSpec",
    "LocalityReport",
    "Packing",
    "ResolvablePacking",
    "SystematicCode",
    "bound_c",
    "bound_i",
    "classify_optimal",
    "code_new",
    "construction_a",
    "construction_b",
    "dm_build",
    "dm_to_resolvable",
    "dm_validate",
    "encode",
    "erase",
    "erase_and_repair",
    "extract_packing",
    "field_new",
    "is_regular",
    "mds_check",
    "min_distance",
    "n1_conditions",
    "packing_validate",
    "pyramid_special_case",
    "resolvable_validate",
    "rs_systematic",
    "theorem3_budget",
    "update_efficiency",
    "verify_locality",
]
