"""Contains the GroupTable class, an enumerated PGL(2,q) or PSL(2,q)"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from data_types import GroupTag, Point
from exceptions import BudgetExceeded
from finite_fields import FieldSpec
from projective_groups.moebius import Moebius
from settings import DEFAULT_BUDGET, Budget

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A list of canonical Moebius maps held as parallel coefficient arrays.

    Element i is (a[i], b[i], c[i], d[i]). The arrays let every element act
    on a point in one vectorized step, which is what stabilizer scans need.

    Attributes:
        spec (FieldSpec): Field the maps are defined over.
        tag (GroupTag): Which group the list enumerates (or is a subset of).
        a, b, c, d (np.ndarray): Encoded canonical coefficients.
    """

    spec: FieldSpec
    tag: GroupTag
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray

    def __len__(self) -> int:
        return len(self.a)

    def element(self, i: int) -> Moebius:
        return Moebius(int(self.a[i]), int(self.b[i]), int(self.c[i]), int(self.d[i]))

    def elements(self) -> list[Moebius]:
        return [
            Moebius(a, b, c, d)
            for a, b, c, d in zip(
                self.a.tolist(), self.b.tolist(), self.c.tolist(), self.d.tolist()
            )
        ]

    def subset(self, mask_or_indices: np.ndarray) -> "GroupTable":
        """The elements selected by a boolean mask or an index array"""

        return GroupTable(
            spec=self.spec,
            tag=self.tag,
            a=self.a[mask_or_indices],
            b=self.b[mask_or_indices],
            c=self.c[mask_or_indices],
            d=self.d[mask_or_indices],
        )

    def images(self, pt: Point) -> np.ndarray:
        """Image of one point under every element, infinity encoded as q"""

        tables, q = self.spec.tables, self.spec.q

        if pt == q:
            return np.where(self.c == 0, q, tables.mul[self.a, tables.inv[self.c]])

        denominator = tables.add[tables.mul[self.c, pt], self.d]
        numerator = tables.add[tables.mul[self.a, pt], self.b]
        return np.where(
            denominator == 0, q, tables.mul[numerator, tables.inv[denominator]]
        )

    def codes(self) -> np.ndarray:
        """One integer per element, ((aq + b)q + c)q + d"""

        q = self.spec.q
        return ((self.a * q + self.b) * q + self.c) * q + self.d

    def determinants(self) -> np.ndarray:
        tables = self.spec.tables
        return tables.add[
            tables.mul[self.a, self.d], tables.neg[tables.mul[self.b, self.c]]
        ]

    def permutations(self) -> np.ndarray:
        """Matrix whose row i lists the images of the points 0..q under element i"""

        return np.stack([self.images(pt) for pt in range(self.spec.q + 1)], axis=1)

    @staticmethod
    def from_elements(
        spec: FieldSpec, elements: Sequence[Moebius], tag: GroupTag = GroupTag.PGL
    ) -> "GroupTable":
        coefficients = np.array(
            [m.as_tuple() for m in elements], dtype=np.int64
        ).reshape(-1, 4)
        return GroupTable(
            spec=spec,
            tag=tag,
            a=coefficients[:, 0],
            b=coefficients[:, 1],
            c=coefficients[:, 2],
            d=coefficients[:, 3],
        )


def square_mask(spec: FieldSpec) -> np.ndarray:
    """Boolean table of the nonzero squares, indexed by encoding"""

    mask = np.zeros(spec.q, dtype=bool)
    if spec.p == 2:
        mask[1:] = True
    else:
        nonzero = np.arange(1, spec.q)
        mask[spec.tables.mul[nonzero, nonzero]] = True
    return mask


@lru_cache(maxsize=4)
def group_table(
    spec: FieldSpec, which: GroupTag, budget: Budget = DEFAULT_BUDGET
) -> GroupTable:
    """Enumerates PGL(2,q) or PSL(2,q) as canonical maps in lexicographic order.

    Only canonical 4-tuples are scanned: (0, 1, c, d) with c != 0, then
    (1, b, c, d) with d != bc. PSL keeps the tuples with square determinant.

    Raises:
        BudgetExceeded: If q(q^2 - 1) is past the enumeration budget.
    """

    q = spec.q
    order = q * (q * q - 1)
    if order > budget.max_group_order:
        raise BudgetExceeded("group order", order, budget.max_group_order)

    tables = spec.tables

    # Maps with a = 0, b = 1
    c0, d0 = np.meshgrid(np.arange(1, q), np.arange(q), indexing="ij")
    c0, d0 = c0.ravel(), d0.ravel()
    a0, b0 = np.zeros_like(c0), np.ones_like(c0)

    # Maps with a = 1
    b1, c1, d1 = np.meshgrid(np.arange(q), np.arange(q), np.arange(q), indexing="ij")
    b1, c1, d1 = b1.ravel(), c1.ravel(), d1.ravel()
    keep = tables.add[d1, tables.neg[tables.mul[b1, c1]]] != 0
    b1, c1, d1 = b1[keep], c1[keep], d1[keep]
    a1 = np.ones_like(b1)

    a = np.concatenate([a0, a1])
    b = np.concatenate([b0, b1])
    c = np.concatenate([c0, c1])
    d = np.concatenate([d0, d1])

    table = GroupTable(spec=spec, tag=GroupTag.PGL, a=a, b=b, c=c, d=d)
    if which == GroupTag.PSL:
        table = table.subset(square_mask(spec)[table.determinants()])
        table = GroupTable(spec, GroupTag.PSL, table.a, table.b, table.c, table.d)

    logger.debug("Enumerated %s(2,%d) with %d elements", which.value, q, len(table))
    return table


def enumerate_group(
    spec: FieldSpec, which: GroupTag, budget: Budget = DEFAULT_BUDGET
) -> list[Moebius]:
    """Every canonical element of PGL(2,q) or PSL(2,q) in lexicographic order.

    Raises:
        BudgetExceeded: If q(q^2 - 1) is past the enumeration budget.
    """

    return group_table(spec, which, budget).elements()


def group_order(spec: FieldSpec, which: GroupTag) -> int:
    """q(q^2 - 1) for PGL, half of it for PSL when q is odd"""

    order = spec.q * (spec.q**2 - 1)
    if which == GroupTag.PSL and spec.p != 2:
        return order // 2
    return order
