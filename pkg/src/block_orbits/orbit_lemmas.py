"""Point orbit lengths each subgroup type of PGL(2,q) may have"""

from collections import Counter
from typing import Sequence

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
)
from exceptions import UnsupportedType
from finite_fields import FieldSpec


def _take(counts: Counter, length: int, at_most: int) -> None:
    counts[length] -= min(counts[length], at_most)


def _rest_regular(counts: Counter, order: int) -> bool:
    return all(length == order for length, count in counts.items() if count > 0)


def check_orbit_length_lemmas(
    t: SubgroupType, lengths: Sequence[int], spec: FieldSpec
) -> bool:
    """Whether a multiset of point orbit lengths fits the subgroup type.

    Args:
        t (SubgroupType): Type of the acting subgroup.
        lengths (Sequence[int]): Orbit lengths on the q + 1 points.
        spec (FieldSpec): Field of the projective line.

    Raises:
        UnsupportedType: For Unclassified and any type without a rule.

    Returns:
        bool: True if the lengths obey the rule for t.
    """

    p = spec.p
    counts = Counter(lengths)

    match t:
        case Cyclic(d):
            if d == 1:
                return set(counts) == {1}
            if counts[1] > 2:
                return False
            _take(counts, 1, 2)
            return _rest_regular(counts, d)

        case Dihedral():
            _take(counts, 2, 1)
            _take(counts, t.d, 2)
            return _rest_regular(counts, t.order)

        case A4():
            if p == 2:
                _take(counts, 1, 1)
            return set(+counts) <= {4, 6, 12}

        case S4():
            allowed = {4, 6, 24} if p == 3 else {6, 8, 12, 24}
            return set(counts) <= allowed

        case A5():
            return set(counts) <= {10, 12, 20, 30, 60}

        case PSLSub(m) | PGLSub(m):
            pm = p**m
            if counts[pm + 1] < 1:
                return False
            _take(counts, pm + 1, 1)
            _take(counts, pm * (pm - 1), 1)
            return _rest_regular(counts, t.group_order(p))

        case ElemAbelian(m):
            if counts[1] != 1:
                return False
            _take(counts, 1, 1)
            return _rest_regular(counts, p**m)

        case Semidirect(m, d):
            pm = p**m
            if counts[1] != 1 or counts[pm] < 1:
                return False
            _take(counts, 1, 1)
            _take(counts, pm, 1)
            return _rest_regular(counts, pm * d)

    raise UnsupportedType(t.group_order(p))
