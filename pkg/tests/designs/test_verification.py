import numpy as np
import pytest
import pytest_mock
from sortedcontainers import SortedSet

from block_orbits import Orbit, orbit_of_block
from data_types import GroupTag
from designs import (
    DesignParams,
    SubgroupOnly,
    SubgroupZero,
    build_block,
    check_simplicity,
    lambda_from_stabilizer,
    triple_counts,
    verify_design,
)
from exceptions import NonIntegralLambda, NotADesign, PreconditionFailed
from projective_groups import group_generators


def family_orbit(spec, family) -> Orbit:
    generators = group_generators(spec, GroupTag.PGL)
    return orbit_of_block(spec, generators, build_block(spec, family))


class TestVerifyDesign:
    def test_q5(self, gf5):
        orbit = family_orbit(gf5, SubgroupOnly(1))
        params = verify_design(orbit, gf5)

        assert params == DesignParams(t=3, v=6, k=4, lambda_=3)
        assert str(params) == "3-(6,4,3)"
        assert params.satisfies_counting_identity(len(orbit))

    def test_q9(self, gf9):
        params = verify_design(family_orbit(gf9, SubgroupOnly(2)), gf9)

        assert str(params) == "3-(10,4,1)"

    def test_q7_a4(self, gf7):
        orbit = family_orbit(gf7, SubgroupZero(2))
        params = verify_design(orbit, gf7)

        assert params.lambda_ == 2
        assert len(orbit) == 28

    def test_not_a_design(self, gf5):
        orbit = Orbit(SortedSet([(0, 1, 2, 3)]), GroupTag.PGL)

        with pytest.raises(NotADesign) as error:
            verify_design(orbit, gf5)

        assert error.value.min_count == 0
        assert error.value.max_count == 1

    def test_preconditions(self, gf5):
        orbit = family_orbit(gf5, SubgroupOnly(1))

        with pytest.raises(PreconditionFailed):
            verify_design(orbit, gf5, t=2)

        with pytest.raises(PreconditionFailed):
            verify_design(Orbit(SortedSet(), GroupTag.PGL), gf5)

        with pytest.raises(PreconditionFailed):
            verify_design(Orbit(SortedSet([(0, 1)]), GroupTag.PGL), gf5)


class TestTripleCounts:
    def test_ranks(self):
        counts = triple_counts(np.array([[0, 1, 2]]), 4)

        assert counts.tolist() == [1, 0, 0, 0]
        assert triple_counts(np.array([[1, 2, 3]]), 4).tolist() == [0, 0, 0, 1]

    def test_all_subsets(self):
        blocks = np.array([[0, 1, 2, 3]])

        assert triple_counts(blocks, 4).tolist() == [1, 1, 1, 1]

    def test_small_blocks(self):
        assert triple_counts(np.array([[0, 1]]), 5).sum() == 0

    def test_chunks(self, mocker: pytest_mock.MockFixture, gf5):
        mocker.patch("designs.verification._RANKS_PER_CHUNK", 8)
        blocks = family_orbit(gf5, SubgroupOnly(1)).as_array()

        assert set(triple_counts(blocks, 6).tolist()) == {3}


class TestLambdaFromStabilizer:
    def test_examples(self):
        assert lambda_from_stabilizer(4, 8) == 3
        assert lambda_from_stabilizer(4, 24) == 1
        assert lambda_from_stabilizer(9, 72) == 7
        assert lambda_from_stabilizer(6, 12) == 10

    def test_non_integral(self):
        with pytest.raises(NonIntegralLambda):
            lambda_from_stabilizer(4, 5)

    def test_preconditions(self):
        with pytest.raises(PreconditionFailed):
            lambda_from_stabilizer(2, 1)

        with pytest.raises(PreconditionFailed):
            lambda_from_stabilizer(4, 0)


def test_simplicity(gf5):
    assert check_simplicity(family_orbit(gf5, SubgroupOnly(1)))
    assert not check_simplicity([(0, 1, 2), (0, 1, 3), (0, 1, 2)])
