"""Orbits of blocks under PGL(2,q) or PSL(2,q) and setwise stabilizers"""

import logging
from concurrent.futures import Executor
from itertools import repeat
from math import comb
from typing import Optional, Sequence

import numpy as np
from sortedcontainers import SortedSet

from block_orbits.blocks import Block, Orbit, Stabilizer
from data_types import BlockPoints, GroupTag, Permutation
from exceptions import BudgetExceeded, EvenCharacteristic, PreconditionFailed
from finite_fields import FieldSpec
from projective_groups import (
    GroupTable,
    Moebius,
    compose,
    group_generators,
    identity,
    inverse,
    permutation,
    scaling,
)
from settings import DEFAULT_BUDGET, Budget

logger = logging.getLogger(__name__)

# Frontier blocks handed to one worker at a time
_EXPAND_CHUNK = 4096

# Blocks and element pairs sampled when checking closure after construction
_CLOSURE_SAMPLES = 64


def _expand(
    perms: Sequence[Permutation], frontier: Sequence[BlockPoints]
) -> list[BlockPoints]:
    """Images of every frontier block under every generator"""

    return [
        tuple(sorted(perm[pt] for pt in block)) for block in frontier for perm in perms
    ]


def _sample(items: Sequence, count: int) -> list:
    step = max(1, len(items) // count)
    return list(items[::step])


def orbit_of_block(
    spec: FieldSpec,
    generators: Sequence[Moebius],
    b: Block,
    group_tag: GroupTag = GroupTag.PGL,
    budget: Budget = DEFAULT_BUDGET,
    executor: Optional[Executor] = None,
) -> Orbit:
    """Closure of a block under a generating set by breadth first search.

    The frontier is expanded in chunks, on the executor when one is given.
    Chunk results are merged in submission order, so the orbit does not
    depend on scheduling.

    Args:
        spec (FieldSpec): Field of the projective line.
        generators (Sequence[Moebius]): Generators of the acting group.
        b (Block): Starting block.
        group_tag (GroupTag): Group the generators generate.
        budget (Budget): Supplies the orbit size limit.
        executor (Executor, optional): Pool for expanding large frontiers.

    Raises:
        BudgetExceeded: If the orbit grows past the block budget.

    Returns:
        Orbit: Every block reachable from b.
    """

    if len(b) > spec.q + 1 or b.points[-1] > spec.q:
        raise PreconditionFailed("orbit", f"{b.points} is not a subset of the line")

    perms = [permutation(spec, g) for g in generators]
    seen: set[BlockPoints] = {b.points}
    frontier: list[BlockPoints] = [b.points]

    while frontier:
        if executor is not None and len(frontier) > _EXPAND_CHUNK:
            chunks = [
                frontier[i : i + _EXPAND_CHUNK]
                for i in range(0, len(frontier), _EXPAND_CHUNK)
            ]
            expanded = executor.map(_expand, repeat(perms), chunks)
            images = [image for chunk in expanded for image in chunk]
        else:
            images = _expand(perms, frontier)

        frontier = []
        for image in images:
            if image not in seen:
                seen.add(image)
                frontier.append(image)

        if len(seen) > budget.max_orbit_blocks:
            raise BudgetExceeded("orbit blocks", len(seen), budget.max_orbit_blocks)

    orbit = Orbit(blocks=SortedSet(seen), group_tag=group_tag)

    for block in _sample(orbit.blocks, _CLOSURE_SAMPLES):
        for image in _expand(perms, [block]):
            if image not in seen:
                raise AssertionError(f"Orbit is not closed at block {block}")

    logger.debug(
        "Orbit of %s under %s(2,%d) has %d blocks",
        b.points,
        group_tag.value,
        spec.q,
        len(orbit),
    )
    return orbit


def _check_subgroup(stabilizer: Stabilizer) -> None:
    """Checks identity, invariance and sampled closure of a stabilizer"""

    spec, table = stabilizer.spec, stabilizer.table
    q, codes = spec.q, np.sort(table.codes())

    def contains(m: Moebius) -> bool:
        code = ((m.a * q + m.b) * q + m.c) * q + m.d
        i = int(np.searchsorted(codes, code))
        return i < len(codes) and codes[i] == code

    if not contains(identity()):
        raise AssertionError("Stabilizer is missing the identity")

    in_block = np.zeros(spec.q + 1, dtype=bool)
    in_block[list(stabilizer.block.points)] = True
    for pt in stabilizer.block.points:
        if not in_block[table.images(pt)].all():
            raise AssertionError("Stabilizer element moves the block")

    indices = _sample(range(len(table)), _CLOSURE_SAMPLES // 8)
    sample = [table.element(i) for i in indices]
    for g in sample:
        if not contains(inverse(spec, g)):
            raise AssertionError("Stabilizer is not closed under inverses")
        for h in sample:
            if not contains(compose(spec, g, h)):
                raise AssertionError("Stabilizer is not closed under composition")


def stabilizer_of_block(group: GroupTable, b: Block) -> Stabilizer:
    """Every element of an enumerated group that maps b onto itself.

    Candidates are narrowed one block point at a time: an element survives
    if it sends each point of b back into b. Elements are bijections, so
    into is onto.

    Args:
        group (GroupTable): The enumerated group.
        b (Block): Block to stabilize.

    Returns:
        Stabilizer: The setwise stabilizer, in the group's element order.
    """

    q = group.spec.q
    in_block = np.zeros(q + 1, dtype=bool)
    in_block[list(b.points)] = True

    candidates = group
    for pt in b.points:
        candidates = candidates.subset(in_block[candidates.images(pt)])

    stabilizer = Stabilizer(block=b, table=candidates)
    _check_subgroup(stabilizer)
    logger.debug("Stabilizer of %s has order %d", b.points, stabilizer.order)
    return stabilizer


def check_orbit_stabilizer(orbit: Orbit, stab: Stabilizer, group_order: int) -> bool:
    """Whether |orbit| * |stabilizer| equals the group order"""

    return len(orbit) * stab.order == group_order


def check_divisibility(stab_order: int, blocksize: int) -> bool:
    """Whether |G_B| divides k(k-1)(k-2), needed for an integral lambda"""

    return (blocksize * (blocksize - 1) * (blocksize - 2)) % stab_order == 0


def orbits_of_rows(perms: np.ndarray) -> list[tuple[int, ...]]:
    """Point orbits of the group whose elements are the permutation rows"""

    visited = np.zeros(perms.shape[1], dtype=bool)
    orbits = []
    for pt in range(perms.shape[1]):
        if visited[pt]:
            continue
        orbit = np.unique(perms[:, pt])
        visited[orbit] = True
        orbits.append(tuple(orbit.tolist()))
    return orbits


def point_orbits(stab: Stabilizer) -> list[tuple[int, ...]]:
    """Orbits of the stabilizer on the q + 1 points, ordered by least point"""

    visited = np.zeros(stab.spec.q + 1, dtype=bool)
    orbits = []
    for pt in range(stab.spec.q + 1):
        if not visited[pt]:
            orbit = np.unique(stab.table.images(pt))
            visited[orbit] = True
            orbits.append(tuple(orbit.tolist()))
    return orbits


def point_orbit_lengths(stab: Stabilizer, spec: FieldSpec) -> list[int]:
    """Sorted lengths of the stabilizer's orbits on the projective line.

    Raises:
        PreconditionFailed: If the stabilizer acts on another line.
    """

    if stab.spec != spec:
        raise PreconditionFailed("point orbits", "stabilizer is over another field")
    return sorted(len(orbit) for orbit in point_orbits(stab))


def is_union_of_point_orbits(stab: Stabilizer) -> bool:
    """Whether every point orbit of G_B lies inside B or misses it"""

    block = set(stab.block.points)
    return all(
        set(orbit) <= block or block.isdisjoint(orbit) for orbit in point_orbits(stab)
    )


def psl_coset_map(spec: FieldSpec) -> Moebius:
    """The map x -> theta x, which lies outside PSL(2,q) for odd q.

    Raises:
        EvenCharacteristic: If q is even, where PSL(2,q) = PGL(2,q).
    """

    if spec.p == 2:
        raise EvenCharacteristic(spec.q)
    return scaling(spec, spec.theta_code)


def psl_orbit_to_pgl(spec: FieldSpec, gamma: Orbit) -> Orbit:
    """Merges a PSL orbit with its image under x -> theta x.

    For odd q that union is the PGL orbit. For even q the groups coincide
    and only the tag changes.

    Raises:
        PreconditionFailed: If gamma is not a PSL orbit.
    """

    if gamma.group_tag != GroupTag.PSL:
        raise PreconditionFailed("psl_orbit_to_pgl", "orbit is not a PSL orbit")

    if spec.p == 2:
        return Orbit(blocks=SortedSet(gamma.blocks), group_tag=GroupTag.PGL)

    perm = permutation(spec, psl_coset_map(spec))
    blocks = SortedSet(gamma.blocks)
    blocks.update(_expand([perm], list(gamma.blocks)))
    return Orbit(blocks=blocks, group_tag=GroupTag.PGL)


def check_three_homogeneous(spec: FieldSpec, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Whether PGL(2,q) is transitive on the 3-subsets of the line"""

    generators = group_generators(spec, GroupTag.PGL)
    triple = Block.of([0, 1, spec.q])
    triples = orbit_of_block(spec, generators, triple, budget=budget)
    return len(triples) == comb(spec.q + 1, 3)
