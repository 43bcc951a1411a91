"""Contains the three power-residue block families"""

from dataclasses import dataclass
from typing import ClassVar

from block_orbits import Block
from data_types import FamilyName, Point
from exceptions import BadResidueIndex, KTooSmall
from finite_fields import FieldSpec


@dataclass(frozen=True)
class BlockFamily:
    """A block built from the multiplicative subgroup <theta^r>.

    Attributes:
        r (int): Residue index, a positive divisor of q - 1.
    """

    name: ClassVar[FamilyName]
    min_k: ClassVar[int]

    r: int

    def k(self, spec: FieldSpec) -> int:
        """Order (q - 1) / r of the subgroup.

        Raises:
            BadResidueIndex: If r does not divide q - 1.
        """

        if self.r < 1 or (spec.q - 1) % self.r != 0:
            raise BadResidueIndex(self.r, spec.q)
        return (spec.q - 1) // self.r

    def extra_points(self, spec: FieldSpec) -> tuple[Point, ...]:
        return ()


@dataclass(frozen=True)
class SubgroupOnly(BlockFamily):
    """<theta^r>"""

    name = FamilyName.SUBGROUP
    min_k = 4


@dataclass(frozen=True)
class SubgroupZero(BlockFamily):
    """<theta^r> with 0 added"""

    name = FamilyName.SUBGROUP_ZERO
    min_k = 3

    def extra_points(self, spec: FieldSpec) -> tuple[Point, ...]:
        return (0,)


@dataclass(frozen=True)
class SubgroupZeroInf(BlockFamily):
    """<theta^r> with 0 and infinity added"""

    name = FamilyName.SUBGROUP_ZERO_INF
    min_k = 2

    def extra_points(self, spec: FieldSpec) -> tuple[Point, ...]:
        return (0, spec.q)


FAMILIES: dict[FamilyName, type[BlockFamily]] = {
    FamilyName.SUBGROUP: SubgroupOnly,
    FamilyName.SUBGROUP_ZERO: SubgroupZero,
    FamilyName.SUBGROUP_ZERO_INF: SubgroupZeroInf,
}


def family_from_name(name: FamilyName | str, r: int) -> BlockFamily:
    """Builds a family from its command line name.

    Raises:
        ValueError: If the name is unknown.
    """

    return FAMILIES[FamilyName(name)](r)


def build_block(spec: FieldSpec, family: BlockFamily) -> Block:
    """The canonical block of a family.

    Args:
        spec (FieldSpec): Field the subgroup lives in.
        family (BlockFamily): Family and residue index.

    Raises:
        BadResidueIndex: If r does not divide q - 1.
        KTooSmall: If k is below the family's minimum.

    Returns:
        Block: Of size k, k + 1 or k + 2 for the three families.
    """

    k = family.k(spec)
    if k < family.min_k:
        raise KTooSmall(k, family.min_k, family.name.value)

    codes = spec.power_subgroup_codes(family.r)
    return Block.of([*codes, *family.extra_points(spec)])
