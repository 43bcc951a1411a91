"""Identifies the isomorphism type of a block stabilizer"""

import logging
from collections import Counter
from dataclasses import dataclass, field

import numpy as np
import sympy

from block_orbits.blocks import Stabilizer
from block_orbits.orbit_computation import orbits_of_rows
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
)
from data_types import GroupTag
from finite_fields import FieldSpec, power_exponent
from projective_groups import GroupTable, group_order, square_mask
from settings import DEFAULT_BUDGET, Budget

logger = logging.getLogger(__name__)

_A4_ORDERS = {1: 1, 2: 3, 3: 8}
_S4_ORDERS = {1: 1, 2: 9, 3: 8, 4: 6}
_A5_ORDERS = {1: 1, 2: 15, 3: 20, 5: 24}


@dataclass(frozen=True)
class Classification:
    """Outcome of classifying a stabilizer.

    Attributes:
        primary (SubgroupType): First type in the test order that matched.
        aliases (frozenset[SubgroupType]): Other names of the same group.
        order (int): Group order.
        order_counts (dict[int, int]): Number of elements of each order.
    """

    primary: SubgroupType
    aliases: frozenset[SubgroupType]
    order: int
    order_counts: dict[int, int] = field(default_factory=dict, compare=False)

    def matches(self, predicted: SubgroupType) -> bool:
        return predicted == self.primary or predicted in self.aliases


def element_orders(perms: np.ndarray) -> np.ndarray:
    """Order of every element, from its permutation row"""

    identity_row = np.arange(perms.shape[1])
    orders = np.zeros(len(perms), dtype=np.int64)
    current = perms.copy()
    exponent = 1

    while (orders == 0).any():
        done = (current == identity_row).all(axis=1) & (orders == 0)
        orders[done] = exponent
        current = np.take_along_axis(perms, current, axis=1)
        exponent += 1
    return orders


def _cyclic_rows(perms: np.ndarray, generator: int) -> set[tuple[int, ...]]:
    """Rows of every power of one element"""

    identity_row = tuple(range(perms.shape[1]))
    rows = {identity_row}
    current = perms[generator]
    while tuple(current.tolist()) not in rows:
        rows.add(tuple(current.tolist()))
        current = perms[generator][current]
    return rows


def _subfield_type(
    spec: FieldSpec, perms: np.ndarray, order: int
) -> SubgroupType | None:
    """PGL(2,p^m) or PSL(2,p^m) if the group acts on an orbit of p^m + 1 points
    the way they act on their own projective line"""

    p = spec.p
    orbits = orbits_of_rows(perms)

    for m in sympy.divisors(spec.n):
        pm = p**m
        full = pm * (pm * pm - 1)
        candidates: list[SubgroupType] = []
        if order == full:
            candidates.append(PGLSub(m))
        if p != 2 and order == full // 2:
            candidates.append(PSLSub(m))
        if not candidates:
            continue

        for orbit in orbits:
            if len(orbit) != pm + 1:
                continue
            triple_images = np.unique(perms[:, list(orbit[:3])], axis=0)
            if len(triple_images) != order:
                continue
            return candidates[0]
    return None


def _dihedral_type(perms: np.ndarray, orders: np.ndarray) -> SubgroupType | None:
    order = len(perms)
    if order % 2 != 0 or order < 4:
        return None

    d = order // 2
    nonidentity = orders[orders > 1]
    if d == 2:
        return Dihedral(4) if (nonidentity == 2).all() else None

    rotations = np.flatnonzero(orders == d)
    if len(rotations) == 0:
        return None

    cyclic = _cyclic_rows(perms, int(rotations[0]))
    for row, element_order in zip(perms.tolist(), orders.tolist()):
        if tuple(row) not in cyclic and element_order != 2:
            return None
    return Dihedral(order)


def _p_group_type(
    spec: FieldSpec, perms: np.ndarray, orders: np.ndarray
) -> SubgroupType | None:
    """Elementary abelian p-groups and their cyclic extensions"""

    p, order = spec.p, len(perms)
    p_elements = np.array(
        [e == 1 or power_exponent(p, int(e)) is not None for e in orders]
    )
    radical = int(p_elements.sum())
    m = power_exponent(p, radical)
    if m is None:
        return None

    if radical == order:
        return ElemAbelian(m) if (orders[orders > 1] == p).all() else None

    # With a common fixed point the p-elements are G meet a unipotent radical
    fixed = (perms[p_elements] == np.arange(perms.shape[1])).all(axis=0)
    if not fixed.any():
        return None

    d = order // radical
    if order % radical != 0 or (radical - 1) % d != 0 or (spec.q - 1) % d != 0:
        return None
    if not (orders == d).any():
        return None
    return Semidirect(m, d)


def classify_perms(spec: FieldSpec, perms: np.ndarray) -> Classification:
    """Classifies a subgroup given by the permutation rows of its elements"""

    order = len(perms)
    orders = element_orders(perms)
    counts = dict(sorted(Counter(orders.tolist()).items()))

    def finish(primary: SubgroupType) -> Classification:
        return Classification(
            primary=primary,
            aliases=isomorphic_names(primary, spec.p) - {primary},
            order=order,
            order_counts=counts,
        )

    if order == 1 or int(orders.max()) == order:
        return finish(Cyclic(order))

    for found in (
        _subfield_type(spec, perms, order),
        _dihedral_type(perms, orders),
        _p_group_type(spec, perms, orders),
    ):
        if found is not None:
            return finish(found)

    if counts == _A4_ORDERS:
        return finish(A4())
    if counts == _S4_ORDERS:
        return finish(S4())
    if counts == _A5_ORDERS:
        return finish(A5())

    logger.warning(
        "Subgroup of order %d in PGL(2,%d) is unclassified, element orders %s",
        order,
        spec.q,
        counts,
    )
    return finish(Unclassified(order))


def classify_subgroup(
    stab: Stabilizer, spec: FieldSpec, budget: Budget = DEFAULT_BUDGET
) -> Classification:
    """Identifies the isomorphism type of a stabilizer.

    Tests run in a fixed order and the first match is the primary type:
    cyclic, subfield group, dihedral, elementary abelian, semidirect, then
    A4, S4 and A5 by their element order counts. Names of the same group
    in characteristic p are attached as aliases.

    Args:
        stab (Stabilizer): The stabilizer to classify.
        spec (FieldSpec): Field of the projective line.
        budget (Budget): Supplies the largest order that is classified.

    Returns:
        Classification: Unclassified when no test matched or the group is
            too large.
    """

    return classify_table(spec, stab.table, budget)


def classify_table(
    spec: FieldSpec, table: GroupTable, budget: Budget = DEFAULT_BUDGET
) -> Classification:
    """Classifies an enumerated subgroup, recognizing PGL(2,q) and PSL(2,q) by order"""

    order = len(table)
    whole: SubgroupType | None = None
    if order == group_order(spec, GroupTag.PGL):
        whole = PGLSub(spec.n)
    elif spec.p != 2 and order == group_order(spec, GroupTag.PSL):
        whole = PSLSub(spec.n)
    if whole is not None:
        aliases = isomorphic_names(whole, spec.p) - {whole}
        return Classification(whole, aliases, order)

    if order > budget.classify_limit:
        logger.warning(
            "Subgroup of order %d is over the classification limit %d",
            order,
            budget.classify_limit,
        )
        return Classification(Unclassified(order), frozenset(), order)

    return classify_perms(spec, table.permutations())


def psl_part(stab: Stabilizer) -> GroupTable:
    """Elements of the stabilizer with square determinant"""

    part = stab.table.subset(square_mask(stab.spec)[stab.table.determinants()])
    return GroupTable(stab.spec, GroupTag.PSL, part.a, part.b, part.c, part.d)


def check_psl_subgroup_conditions(
    stab: Stabilizer, spec: FieldSpec, budget: Budget = DEFAULT_BUDGET
) -> bool:
    """Checks the PSL(2,q) restrictions on G_B meet PSL(2,q).

    For odd q, cyclic and dihedral parts of order d or 2d need d to divide
    (q - 1)/2 or (q + 1)/2, and a PGL(2,p^m) part needs 2m | n. Groups that
    are also p-groups or their extensions are exempt.
    """

    if spec.p == 2:
        return True

    part = psl_part(stab)
    classification = classify_table(spec, part, budget)
    names = {classification.primary} | classification.aliases
    if any(isinstance(name, (ElemAbelian, Semidirect)) for name in names):
        return True

    half_minus, half_plus = (spec.q - 1) // 2, (spec.q + 1) // 2
    primary = classification.primary
    match primary:
        case Cyclic(d):
            return half_minus % d == 0 or half_plus % d == 0
        case Dihedral():
            d = primary.d
            return half_minus % d == 0 or half_plus % d == 0
    for name in names:
        if isinstance(name, PGLSub) and spec.n % (2 * name.m) != 0:
            return False
    return True
