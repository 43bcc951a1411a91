"""Predicted stabilizer types and lambda values for the three block families"""

from typing import NamedTuple

from block_orbits import (
    A4,
    S4,
    Cyclic,
    Dihedral,
    PGLSub,
    Semidirect,
    SubgroupType,
)
from designs.families import BlockFamily, SubgroupOnly, SubgroupZero, SubgroupZeroInf
from exceptions import KTooSmall, PreconditionFailed
from finite_fields import FieldSpec, power_exponent


class Prediction(NamedTuple):
    subgroup: SubgroupType
    lambda_: int


def _check_k(spec: FieldSpec, k: int, minimum: int, family: str) -> None:
    if k < minimum:
        raise KTooSmall(k, minimum, family)
    if (spec.q - 1) % k != 0:
        raise PreconditionFailed("predict", f"k = {k} does not divide q - 1")


def predict_subgroup_only(spec: FieldSpec, k: int) -> Prediction:
    """Stabilizer and lambda for the block <theta^r> of size k.

    Raises:
        KTooSmall: If k < 4.
    """

    _check_k(spec, k, 4, SubgroupOnly.name.value)

    if spec.q % (k - 1) != 0:
        return Prediction(Dihedral(2 * k), (k - 1) * (k - 2) // 2)

    m = power_exponent(spec.p, k - 1)
    assert m is not None, "k - 1 divides q, so it is a power of p"
    return Prediction(PGLSub(m), 1)


def predict_subgroup_zero(spec: FieldSpec, k: int) -> Prediction:
    """Stabilizer and lambda for the block <theta^r> u {0} of size k + 1.

    Raises:
        KTooSmall: If k < 3.
    """

    _check_k(spec, k, 3, SubgroupZero.name.value)

    if k == 3:
        assert spec.p != 3, "3 divides q - 1, so q is not a power of 3"
        return Prediction(A4(), 2)

    if spec.q % (k + 1) != 0:
        return Prediction(Cyclic(k), (k + 1) * (k - 1))

    m = power_exponent(spec.p, k + 1)
    assert m is not None, "k + 1 divides q, so it is a power of p"
    return Prediction(Semidirect(m, spec.p**m - 1), k - 1)


def predict_subgroup_zero_inf(spec: FieldSpec, k: int) -> int:
    """Lambda for the block <theta^r> u {0, inf} of size k + 2.

    Raises:
        KTooSmall: If k < 2.
    """

    _check_k(spec, k, 2, SubgroupZeroInf.name.value)

    if spec.q % (k + 1) == 0:
        return 1
    if k in (2, 4):
        return k + 1
    return (k + 2) * (k + 1) // 2


def predict_subgroup_zero_inf_stabilizer(spec: FieldSpec, k: int) -> SubgroupType:
    """Stabilizer implied by the lambda above through |G_B| = b(b-1)(b-2)/lambda.

    Raises:
        KTooSmall: If k < 2.
    """

    _check_k(spec, k, 2, SubgroupZeroInf.name.value)

    if spec.q % (k + 1) == 0:
        m = power_exponent(spec.p, k + 1)
        assert m is not None, "k + 1 divides q, so it is a power of p"
        return PGLSub(m)
    if k == 2:
        return Dihedral(8)
    if k == 4:
        return S4()
    return Dihedral(2 * k)


def predict(spec: FieldSpec, family: BlockFamily) -> Prediction:
    """Prediction for any family.

    Raises:
        BadResidueIndex: If r does not divide q - 1.
        KTooSmall: If k is below the family's minimum.
    """

    k = family.k(spec)
    match family:
        case SubgroupOnly():
            return predict_subgroup_only(spec, k)
        case SubgroupZero():
            return predict_subgroup_zero(spec, k)
        case SubgroupZeroInf():
            return Prediction(
                predict_subgroup_zero_inf_stabilizer(spec, k),
                predict_subgroup_zero_inf(spec, k),
            )
    raise PreconditionFailed("predict", f"unknown family {family}")


def theorem_case(spec: FieldSpec, family: BlockFamily) -> str:
    """Name of the case of the family's theorem that (q, r) falls under"""

    k = family.k(spec)
    match family:
        case SubgroupOnly():
            return "dihedral" if spec.q % (k - 1) != 0 else "subfield"
        case SubgroupZero():
            if k == 3:
                return "a4"
            return "cyclic" if spec.q % (k + 1) != 0 else "semidirect"
    if spec.q % (k + 1) == 0:
        return "subfield"
    return "small" if k in (2, 4) else "dihedral"
