import pytest

from block_orbits import Block, stabilizer_of_block
from data_types import FamilyName, GroupTag
from designs import (
    SubgroupOnly,
    SubgroupZero,
    build_block,
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
from exceptions import PreconditionFailed
from projective_groups import Moebius, apply, group_table
from tests.testing_data.data_generation import small_field


class TestSubfieldWitness:
    def test_q9(self, gf9):
        f = witness_subfield_map(gf9, 2)

        assert apply(gf9, f, 6) == gf9.infinity
        assert check_subfield_image(gf9, 2)

    def test_q25(self):
        assert check_subfield_image(small_field(25), 4)

    def test_subfield_block(self, gf9):
        assert subfield_block(gf9, 1) == Block((0, 1, 2, 9))

    @pytest.mark.parametrize("q,r", [(9, 2), (25, 4)])
    def test_orbit_equivalence(self, q, r):
        assert check_subfield_orbit_equivalence(small_field(q), r)

    def test_not_a_subfield_case(self, gf5, gf13, gf4):
        with pytest.raises(PreconditionFailed):
            witness_subfield_map(gf5, 1)

        with pytest.raises(PreconditionFailed):
            check_subfield_image(gf13, 3)

        with pytest.raises(PreconditionFailed):
            check_subfield_image(gf4, 1)


class TestA4Witness:
    def test_q7(self, gf7):
        assert witness_a4_map(gf7, 2) == Moebius(1, 6, 5, 6)
        assert check_a4_witness(gf7, 2)

    def test_in_stabilizer(self, gf7):
        block = build_block(gf7, SubgroupZero(2))
        stabilizer = stabilizer_of_block(group_table(gf7, GroupTag.PGL), block)

        assert check_a4_witness(gf7, 2, stabilizer)

    @pytest.mark.parametrize("q,r", [(13, 4), (4, 1), (16, 5)])
    def test_other_fields(self, q, r):
        assert check_a4_witness(small_field(q), r)

    def test_characteristic_two(self, gf4):
        assert witness_a4_map(gf4, 1) == Moebius(1, 1, 0, 1)

    def test_wrong_k(self, gf7):
        with pytest.raises(PreconditionFailed):
            witness_a4_map(gf7, 1)


class TestRemark:
    @pytest.mark.parametrize("q,r", [(4, 1), (16, 5)])
    def test_equivalence(self, q, r):
        assert check_remark_equivalence(small_field(q), r)

    def test_q4_map(self, gf4):
        f = remark_map(gf4, 1)

        assert apply(gf4, f, gf4.infinity) == 0
        assert apply(gf4, f, 0) == 3

    def test_preconditions(self, gf7):
        with pytest.raises(PreconditionFailed):
            remark_map(gf7, 2)

        with pytest.raises(PreconditionFailed):
            remark_map(small_field(16), 3)


@pytest.mark.parametrize(
    "q,k,family,expected",
    [
        (9, 4, FamilyName.SUBGROUP, True),
        (27, 4, FamilyName.SUBGROUP, False),
        (25, 6, SubgroupOnly(4), True),
        (9, 8, FamilyName.SUBGROUP_ZERO, True),
        (8, 7, SubgroupZero(1), True),
        (4, 3, FamilyName.SUBGROUP_ZERO_INF, True),
        (16, 3, FamilyName.SUBGROUP_ZERO_INF, True),
    ],
)
def test_subfield_divisibility(q, k, family, expected):
    assert check_subfield_divisibility(small_field(q), k, family) == expected


def test_subfield_divisibility_needs_power(gf5):
    with pytest.raises(PreconditionFailed):
        check_subfield_divisibility(gf5, 4, FamilyName.SUBGROUP)


def test_block_is_subfield(gf9, gf13):
    assert check_block_is_subfield(gf9, Block.of(range(9)))
    assert check_block_is_subfield(gf9, Block.of([0, 1, 2]))
    assert not check_block_is_subfield(gf9, Block.of([1, 2, 3]))
    assert not check_block_is_subfield(gf13, Block.of([0, 1, 2, 3]))
