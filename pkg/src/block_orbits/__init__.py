"""Exports the orbit and stabilizer functions to make them easier to import"""

from block_orbits.blocks import Block, Orbit, Stabilizer
from block_orbits.classification import (
    Classification,
    check_psl_subgroup_conditions,
    classify_perms,
    classify_subgroup,
    classify_table,
    element_orders,
    psl_part,
)
from block_orbits.orbit_computation import (
    check_divisibility,
    check_orbit_stabilizer,
    check_three_homogeneous,
    is_union_of_point_orbits,
    orbit_of_block,
    point_orbit_lengths,
    point_orbits,
    psl_coset_map,
    psl_orbit_to_pgl,
    stabilizer_of_block,
)
from block_orbits.orbit_lemmas import check_orbit_length_lemmas
from block_orbits.subgroup_types import (
    A4,
    A5,
    S4,
    Cyclic,
    Dihedral,
    ElemAbelian,
    PGLSub,
    PSLSub,
    Semidirect,
    SubgroupType,
    Unclassified,
    isomorphic_names,
    satisfies_dickson_constraints,
)
