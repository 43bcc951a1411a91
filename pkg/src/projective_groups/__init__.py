"""Exports the projective group classes and operations to make them easier to import"""

from projective_groups.group_table import (
    GroupTable,
    enumerate_group,
    group_order,
    group_table,
    square_mask,
)
from projective_groups.moebius import (
    Moebius,
    apply,
    canonical,
    compose,
    determinant,
    element_order,
    from_elements,
    from_text,
    group_generators,
    identity,
    inverse,
    is_in_psl,
    permutation,
    reciprocal,
    scaling,
    standard_generators,
    translation,
)
from projective_groups.projective_line import (
    INFINITY_TOKEN,
    is_infinity,
    point_from_text,
    point_to_text,
    points,
)
