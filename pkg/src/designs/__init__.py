"""Exports the block families and design checks to make them easier to import"""

from designs.families import (
    FAMILIES,
    BlockFamily,
    SubgroupOnly,
    SubgroupZero,
    SubgroupZeroInf,
    build_block,
    family_from_name,
)
from designs.predictions import (
    Prediction,
    predict,
    predict_subgroup_only,
    predict_subgroup_zero,
    predict_subgroup_zero_inf,
    predict_subgroup_zero_inf_stabilizer,
    theorem_case,
)
from designs.verification import (
    DesignParams,
    check_simplicity,
    lambda_from_stabilizer,
    triple_counts,
    verify_design,
)
from designs.witnesses import (
    check_a4_witness,
    check_block_is_subfield,
    check_remark_equivalence,
    check_subfield_divisibility,
    check_subfield_image,
    check_subfield_orbit_equivalence,
    remark_map,
    subfield_block,
    witness_a4_map,
    witness_subfield_map,
)
