"""Explicit maps relating the family blocks to subfield lines and to each other"""

from typing import Optional

from block_orbits import Block, Stabilizer, orbit_of_block
from data_types import FamilyName, GroupTag
from designs.families import BlockFamily, SubgroupOnly, build_block
from exceptions import PreconditionFailed
from finite_fields import FieldSpec, power_exponent
from projective_groups import (
    Moebius,
    apply,
    canonical,
    group_generators,
    scaling,
)
from settings import DEFAULT_BUDGET, Budget


def _beta(spec: FieldSpec, r: int) -> int:
    return spec.power_code(spec.theta_code, r)


def _subfield_degree(spec: FieldSpec, r: int) -> int:
    """m with k - 1 = p^m for k = (q - 1) / r, requiring odd q"""

    k = SubgroupOnly(r).k(spec)
    m = power_exponent(spec.p, k - 1)
    if m is None:
        raise PreconditionFailed("subfield witness", f"k - 1 = {k - 1} is not a power")
    if spec.p == 2:
        raise PreconditionFailed("subfield witness", "q is even, so k is odd")
    return m


def subfield_block(spec: FieldSpec, m: int) -> Block:
    """GF(p^m) together with infinity"""

    return Block.of([*spec.subfield_codes(m), spec.q])


def witness_subfield_map(spec: FieldSpec, r: int) -> Moebius:
    """The map x -> (x + beta) / (beta x + 1) with beta = theta^r.

    Raises:
        PreconditionFailed: If k - 1 is not a power of p or q is even.
    """

    _subfield_degree(spec, r)
    beta = _beta(spec, r)
    return canonical(spec, 1, beta, beta, 1)


def check_subfield_image(spec: FieldSpec, r: int) -> bool:
    """Whether the witness map sends <theta^r> onto GF(p^m) u {inf}.

    The pole is beta^(k/2 - 1), and every other point of the subgroup must
    land in the subfield.

    Raises:
        PreconditionFailed: If k - 1 is not a power of p or q is even.
    """

    m = _subfield_degree(spec, r)
    f = witness_subfield_map(spec, r)
    k = (spec.q - 1) // r
    pole = spec.power_code(_beta(spec, r), k // 2 - 1)
    if apply(spec, f, pole) != spec.q:
        return False

    subgroup = spec.power_subgroup_codes(r)
    images = {apply(spec, f, x) for x in subgroup}
    return images == set(subfield_block(spec, m).points)


def check_subfield_orbit_equivalence(
    spec: FieldSpec, r: int, budget: Budget = DEFAULT_BUDGET
) -> bool:
    """Whether <theta^r> and GF(p^m) u {inf} have the same PGL orbit.

    Raises:
        PreconditionFailed: If k - 1 is not a power of p.
    """

    k = SubgroupOnly(r).k(spec)
    m = power_exponent(spec.p, k - 1)
    if m is None:
        raise PreconditionFailed("subfield orbit", f"k - 1 = {k - 1} is not a power")

    block = build_block(spec, SubgroupOnly(r))
    orbit = orbit_of_block(
        spec, group_generators(spec, GroupTag.PGL), block, budget=budget
    )
    return subfield_block(spec, m) in orbit


def witness_a4_map(spec: FieldSpec, r: int) -> Moebius:
    """The map x -> (x - 1) / ((beta^2 + beta - 1) x - 1) with beta = theta^r.

    In characteristic 2 it is x -> x + 1.

    Raises:
        PreconditionFailed: If k = (q - 1) / r is not 3.
    """

    if r < 1 or (spec.q - 1) != 3 * r:
        raise PreconditionFailed("a4 witness", f"k = (q - 1) / {r} is not 3")

    tables = spec.tables
    add, mul, neg = tables.add_rows, tables.mul_rows, tables.neg_list
    beta = _beta(spec, r)
    minus_one = neg[1]
    c = add[add[mul[beta][beta]][beta]][minus_one]
    return canonical(spec, 1, minus_one, c, minus_one)


def check_a4_witness(
    spec: FieldSpec, r: int, stabilizer: Optional[Stabilizer] = None
) -> bool:
    """Whether the A4 witness swaps 0 with 1 and beta with beta^2.

    Also requires the map to lie outside <x -> beta x>, and inside the
    stabilizer when one is given.

    Raises:
        PreconditionFailed: If k = (q - 1) / r is not 3.
    """

    f = witness_a4_map(spec, r)
    beta = _beta(spec, r)
    beta_squared = spec.power_code(beta, 2)

    expected = {0: 1, 1: 0, beta: beta_squared, beta_squared: beta}
    if any(apply(spec, f, x) != image for x, image in expected.items()):
        return False

    rotations = {scaling(spec, spec.power_code(beta, i)) for i in range(3)}
    if f in rotations:
        return False

    if stabilizer is not None and f not in set(stabilizer.elements):
        return False
    return True


def remark_map(spec: FieldSpec, r: int) -> Moebius:
    """The map x -> 1 / (beta^2 x + beta) with beta = theta^r.

    Raises:
        PreconditionFailed: If q is odd or r is not (q - 1) / 3.
    """

    if spec.p != 2:
        raise PreconditionFailed("remark", f"q = {spec.q} is odd")
    if (spec.q - 1) != 3 * r:
        raise PreconditionFailed("remark", f"r = {r} is not (q - 1) / 3")

    beta = _beta(spec, r)
    return canonical(spec, 0, 1, spec.power_code(beta, 2), beta)


def check_remark_equivalence(spec: FieldSpec, r: int) -> bool:
    """Whether the remark map sends {0, 1, beta, inf} onto {0, 1, beta, beta^2}.

    The second block is <beta> u {0}, so both blocks then have one orbit.

    Raises:
        PreconditionFailed: If q is odd or r is not (q - 1) / 3.
    """

    f = remark_map(spec, r)
    beta = _beta(spec, r)
    source = {0, 1, beta, spec.q}
    target = {0, 1, beta, spec.power_code(beta, 2)}
    return {apply(spec, f, x) for x in source} == target


def check_subfield_divisibility(
    spec: FieldSpec, k: int, family: BlockFamily | FamilyName
) -> bool:
    """Whether the subfield degree divides n as the subfield cases require.

    For <theta^r> with k - 1 = p^m this is 2m | n. For <theta^r> u {0} and
    <theta^r> u {0, inf} with k + 1 = p^m it is m | n.

    Raises:
        PreconditionFailed: If k -/+ 1 is not a power of p.
    """

    name = family.name if isinstance(family, BlockFamily) else FamilyName(family)
    if name == FamilyName.SUBGROUP:
        m = power_exponent(spec.p, k - 1)
        if m is None:
            raise PreconditionFailed("divisibility", f"k - 1 = {k - 1} is not a power")
        return spec.n % (2 * m) == 0

    m = power_exponent(spec.p, k + 1)
    if m is None:
        raise PreconditionFailed("divisibility", f"k + 1 = {k + 1} is not a power")
    return spec.n % m == 0


def check_block_is_subfield(spec: FieldSpec, block: Block) -> bool:
    """Whether a block of size p^m equals the subfield GF(p^m)"""

    m = power_exponent(spec.p, len(block))
    if m is None or spec.n % m != 0:
        return False
    return block.points == tuple(spec.subfield_codes(m))
