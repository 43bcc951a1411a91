"""Contains data types used throughout program"""

from enum import Enum

# Type aliases

# Integer encoding of a field element, sum of coeffs[j] * p^j
Encoded = int

# Point of the projective line. Finite points are their field encoding and
# infinity is the field order q, so the natural integer order puts infinity
# after every finite point.
Point = int

# Sorted tuple of distinct points
BlockPoints = tuple[Point, ...]

# Image of every point 0..q under a group element
Permutation = tuple[Point, ...]


class GroupTag(str, Enum):
    """Which of the two projective groups a computation ranges over"""

    PGL = "PGL"
    PSL = "PSL"


class FamilyName(str, Enum):
    """Command line names of the three power-residue block families.

    SUBGROUP is the block <theta^r>, SUBGROUP_ZERO adds 0 and
    SUBGROUP_ZERO_INF adds both 0 and infinity.
    """

    SUBGROUP = "subgroup"
    SUBGROUP_ZERO = "subgroup0"
    SUBGROUP_ZERO_INF = "subgroup0inf"
