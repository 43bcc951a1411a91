"""Checks that a block orbit is a 3-design by counting the blocks on every triple"""

import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Hashable, Iterable

import numpy as np

from block_orbits import Orbit
from exceptions import NonIntegralLambda, NotADesign, PreconditionFailed
from finite_fields import FieldSpec

logger = logging.getLogger(__name__)

# Upper bound on triple ranks held in memory per counting step
_RANKS_PER_CHUNK = 1 << 22


@dataclass(frozen=True)
class DesignParams:
    """Parameters of a t-(v, k, lambda) design.

    Attributes:
        t (int): Size of the subsets covered.
        v (int): Number of points.
        k (int): Block size.
        lambda_ (int): Blocks through every t-subset.
    """

    t: int
    v: int
    k: int
    lambda_: int

    def satisfies_counting_identity(self, block_count: int) -> bool:
        """lambda * C(v, t) == |blocks| * C(k, t)"""
        return self.lambda_ * comb(self.v, self.t) == block_count * comb(self.k, self.t)

    def __str__(self) -> str:
        return f"{self.t}-({self.v},{self.k},{self.lambda_})"


def triple_counts(blocks: np.ndarray, v: int) -> np.ndarray:
    """Number of blocks through each 3-subset of range(v).

    A sorted triple x < y < z is stored at rank C(z,3) + C(y,2) + x.

    Args:
        blocks (np.ndarray): One sorted block per row.
        v (int): Number of points.

    Returns:
        np.ndarray: Count per rank, of length C(v, 3).
    """

    counts = np.zeros(comb(v, 3), dtype=np.int64)
    if blocks.shape[1] < 3:
        return counts

    points = np.arange(v + 1, dtype=np.int64)
    binom2 = points * (points - 1) // 2
    binom3 = points * (points - 1) * (points - 2) // 6

    positions = np.array(list(combinations(range(blocks.shape[1]), 3)))
    first, second, third = positions.T
    rows_per_chunk = max(1, _RANKS_PER_CHUNK // len(positions))

    for start in range(0, len(blocks), rows_per_chunk):
        part = blocks[start : start + rows_per_chunk]
        ranks = part[:, first] + binom2[part[:, second]] + binom3[part[:, third]]
        counts += np.bincount(ranks.ravel(), minlength=len(counts))
    return counts


def verify_design(orbit: Orbit, spec: FieldSpec, t: int = 3) -> DesignParams:
    """Counts the orbit blocks through every 3-subset of the line.

    Args:
        orbit (Orbit): The blocks.
        spec (FieldSpec): Field of the projective line.
        t (int): Must be 3.

    Raises:
        PreconditionFailed: If t is not 3, the orbit is empty or its blocks
            are smaller than 3.
        NotADesign: If the counts are not constant.

    Returns:
        DesignParams: The 3-(q+1, k, lambda) parameters.
    """

    if t != 3:
        raise PreconditionFailed("verify_design", f"only t = 3 is supported, got {t}")
    if len(orbit) == 0:
        raise PreconditionFailed("verify_design", "the orbit is empty")
    if orbit.block_size < 3:
        raise PreconditionFailed("verify_design", "blocks have fewer than 3 points")

    v = spec.q + 1
    counts = triple_counts(orbit.as_array(), v)
    low, high = int(counts.min()), int(counts.max())
    if low != high:
        raise NotADesign(low, high)

    params = DesignParams(t=3, v=v, k=orbit.block_size, lambda_=low)
    logger.debug("Orbit of %d blocks is a %s design", len(orbit), params)
    return params


def lambda_from_stabilizer(blocksize: int, stab_order: int) -> int:
    """k(k-1)(k-2) / |G_B|.

    Raises:
        PreconditionFailed: If blocksize < 3 or stab_order < 1.
        NonIntegralLambda: If the quotient is not an integer.
    """

    if blocksize < 3 or stab_order < 1:
        raise PreconditionFailed(
            "lambda_from_stabilizer", f"blocksize {blocksize}, stabilizer {stab_order}"
        )

    numerator = blocksize * (blocksize - 1) * (blocksize - 2)
    if numerator % stab_order != 0:
        raise NonIntegralLambda(blocksize, stab_order)
    return numerator // stab_order


def check_simplicity(blocks: Iterable[Hashable]) -> bool:
    """Whether no block occurs twice"""

    seen = set()
    for block in blocks:
        if block in seen:
            return False
        seen.add(block)
    return True
