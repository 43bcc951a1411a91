import numpy as np
import pytest

from block_orbits import (
    A4,
    S4,
    Block,
    Cyclic,
    Dihedral,
    PGLSub,
    PSLSub,
    Semidirect,
    Unclassified,
    check_psl_subgroup_conditions,
    classify_subgroup,
    classify_table,
    element_orders,
    psl_part,
    stabilizer_of_block,
)
from data_types import GroupTag
from finite_fields import FieldSpec
from projective_groups import group_table
from settings import Budget
from tests.testing_data.data_generation import small_field


def stabilizer(spec: FieldSpec, points):
    return stabilizer_of_block(group_table(spec, GroupTag.PGL), Block.of(points))


def test_dihedral(gf5):
    result = classify_subgroup(stabilizer(gf5, [1, 2, 3, 4]), gf5)

    assert result.primary == Dihedral(8)
    assert result.order == 8
    assert result.order_counts == {1: 1, 2: 5, 4: 2}


def test_a4(gf7):
    result = classify_subgroup(stabilizer(gf7, [0, 1, 2, 4]), gf7)

    assert result.primary == A4()
    assert result.order_counts == {1: 1, 2: 3, 3: 8}


def test_subfield_before_histogram(gf9):
    result = classify_subgroup(stabilizer(gf9, gf9.power_subgroup_codes(2)), gf9)

    assert result.primary == PGLSub(1)
    assert S4() in result.aliases
    assert result.matches(S4())
    assert result.primary.label(gf9.p) == "PGL(2,3)"


def test_semidirect(gf9, gf4):
    assert classify_subgroup(stabilizer(gf9, range(9)), gf9).primary == Semidirect(2, 8)

    result = classify_subgroup(stabilizer(gf4, range(4)), gf4)
    assert result.primary == Semidirect(2, 3)
    assert result.matches(A4())


def test_cyclic(gf13):
    block = [0, *gf13.power_subgroup_codes(3)]

    assert classify_subgroup(stabilizer(gf13, block), gf13).primary == Cyclic(4)


def test_s4_by_histogram(gf13):
    block = [0, *gf13.power_subgroup_codes(3), gf13.infinity]
    result = classify_subgroup(stabilizer(gf13, block), gf13)

    assert result.primary == S4()
    assert result.order_counts == {1: 1, 2: 9, 3: 8, 4: 6}


def test_whole_group(gf5, gf7):
    assert classify_table(gf5, group_table(gf5, GroupTag.PGL)).primary == PGLSub(1)
    assert classify_table(gf7, group_table(gf7, GroupTag.PSL)).primary == PSLSub(1)


def test_over_limit(gf5):
    result = classify_subgroup(
        stabilizer(gf5, [1, 2, 3, 4]), gf5, Budget(max_classify_order=4)
    )

    assert result.primary == Unclassified(8)


def test_element_orders():
    # A 4-cycle and its powers acting on four points
    perms = np.array([[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]])

    assert element_orders(perms).tolist() == [1, 4, 2, 4]


class TestPslConditions:
    def test_psl_part(self, gf5):
        part = psl_part(stabilizer(gf5, [1, 2, 3, 4]))

        assert len(part) == 4
        assert part.tag == GroupTag.PSL

    @pytest.mark.parametrize(
        "q,points",
        [
            (5, [1, 2, 3, 4]),
            (7, [0, 1, 2, 4]),
            (9, [1, 2, 3, 6]),
            (9, range(9)),
            (11, [1, 3, 4, 5, 9]),
            (13, range(1, 13)),
        ],
    )
    def test_holds(self, q, points):
        spec = small_field(q)

        assert check_psl_subgroup_conditions(stabilizer(spec, points), spec)

    def test_even_q(self, gf8):
        assert check_psl_subgroup_conditions(stabilizer(gf8, [0, 1, 2, 4]), gf8)
