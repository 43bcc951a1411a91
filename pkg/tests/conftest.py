"""Contains fixtures for the fields most tests run over"""

import pytest

from finite_fields import FieldSpec
from tests.testing_data.data_generation import small_field


@pytest.fixture(scope="session")
def gf4() -> FieldSpec:
    return small_field(4)


@pytest.fixture(scope="session")
def gf5() -> FieldSpec:
    return small_field(5)


@pytest.fixture(scope="session")
def gf7() -> FieldSpec:
    return small_field(7)


@pytest.fixture(scope="session")
def gf8() -> FieldSpec:
    return small_field(8)


@pytest.fixture(scope="session")
def gf9() -> FieldSpec:
    """GF(9) with modulus x^2 + 1 and theta = x + 1, encoded as 4"""
    return small_field(9)


@pytest.fixture(scope="session")
def gf13() -> FieldSpec:
    return small_field(13)
