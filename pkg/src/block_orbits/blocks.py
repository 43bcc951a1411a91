"""Contains the Block, Orbit and Stabilizer classes"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np
from sortedcontainers import SortedSet

from data_types import BlockPoints, GroupTag, Permutation, Point
from finite_fields import FieldSpec
from projective_groups import GroupTable, Moebius, point_to_text


@dataclass(frozen=True, order=True)
class Block:
    """A k-subset of the projective line in canonical form.

    Attributes:
        points (BlockPoints): Strictly increasing point encodings, infinity
            (encoded as q) last.
    """

    points: BlockPoints

    def __post_init__(self) -> None:
        if len(self.points) == 0:
            raise ValueError("A block needs at least one point")
        if any(x >= y for x, y in zip(self.points, self.points[1:])):
            raise ValueError(f"Block points {self.points} are not strictly sorted")

    @staticmethod
    def of(points: Iterable[Point]) -> "Block":
        """Canonical block of a collection of points, duplicates dropped"""
        return Block(tuple(sorted(set(points))))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, pt: object) -> bool:
        return pt in self.points

    def image(self, perm: Permutation) -> "Block":
        """Block mapped pointwise by a permutation of the line"""
        return Block(tuple(sorted(perm[pt] for pt in self.points)))

    def to_text(self, spec: FieldSpec) -> str:
        return ",".join(point_to_text(spec, pt) for pt in self.points)


@dataclass
class Orbit:
    """The blocks reached from one block by a group.

    Attributes:
        blocks (SortedSet): Canonical point tuples of every block, sorted.
        group_tag (GroupTag): Group the orbit was computed under.
    """

    blocks: SortedSet
    group_tag: GroupTag

    def __len__(self) -> int:
        return len(self.blocks)

    def __contains__(self, block: object) -> bool:
        if isinstance(block, Block):
            return block.points in self.blocks
        return block in self.blocks

    def __iter__(self) -> Iterator[BlockPoints]:
        return iter(self.blocks)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    def as_array(self) -> np.ndarray:
        """Blocks as rows of a 2D array, in sorted order"""
        return np.array(list(self.blocks), dtype=np.int64).reshape(len(self), -1)

    def to_lines(self, spec: FieldSpec) -> list[str]:
        """One comma separated line per block, in block order"""
        return [Block(points).to_text(spec) for points in self.blocks]


@dataclass
class Stabilizer:
    """Setwise stabilizer of a block.

    Attributes:
        block (Block): The stabilized block.
        table (GroupTable): Every group element mapping the block onto itself.
    """

    block: Block
    table: GroupTable = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def spec(self) -> FieldSpec:
        return self.table.spec

    @cached_property
    def elements(self) -> list[Moebius]:
        return self.table.elements()

    @cached_property
    def permutations(self) -> np.ndarray:
        """Row i holds the images of the points 0..q under element i"""
        return self.table.permutations()
