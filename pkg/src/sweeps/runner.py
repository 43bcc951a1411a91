"""Runs the pipeline over every admissible case up to a field order"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import sympy

from data_types import FamilyName
from designs import FAMILIES, BlockFamily
from exceptions import BudgetExceeded
from finite_fields import (
    FieldSpec,
    make_field,
    prime_power,
    prime_powers,
    with_primitive,
)
from settings import DEFAULT_BUDGET, Budget
from sweeps.pipeline import SweepRow, run_case

logger = logging.getLogger(__name__)

FAMILY_ORDER = list(FamilyName)


@dataclass(frozen=True)
class FieldCases:
    """Every case of one field order, the unit of work handed to a worker"""

    q: int
    families: tuple[BlockFamily, ...]


def admissible_cases(
    max_q: int, families: Iterable[FamilyName], min_q: int = 2
) -> list[FieldCases]:
    """Every (q, family, r) whose k = (q - 1) / r meets the family minimum.

    Cases are grouped by q in increasing order, then by family and r.
    """

    wanted = [name for name in FAMILY_ORDER if name in set(families)]
    grouped = []
    for q in prime_powers(max_q, start=min_q):
        cases = []
        for name in wanted:
            family_class = FAMILIES[name]
            for r in sympy.divisors(q - 1):
                if (q - 1) // r >= family_class.min_k:
                    cases.append(family_class(int(r)))
        if cases:
            grouped.append(FieldCases(q, tuple(cases)))
    return grouped


def _skipped_row(spec: FieldSpec, family: BlockFamily, error: Exception) -> SweepRow:
    logger.warning(
        "Skipping q=%d %s r=%d: %s", spec.q, family.name.value, family.r, error
    )
    k = family.k(spec)
    return SweepRow(
        q=spec.q,
        p=spec.p,
        n=spec.n,
        family=family.name.value,
        r=family.r,
        k=k,
        blocksize=k + len(family.extra_points(spec)),
        orbit_size=0,
        stab_order=0,
        stab_type="",
        predicted_type="",
        case="",
        lambda_counted=None,
        lambda_formula=0,
        lambda_predicted=0,
        match=False,
        status="skipped",
    )


def run_field(
    cases: FieldCases,
    budget: Budget = DEFAULT_BUDGET,
    stab_only: bool = False,
    theta_rank: int = 0,
) -> list[SweepRow]:
    """Runs every case of one field order.

    theta_rank picks the primitive element, counted in encoding order and
    taken modulo the number of primitive elements.
    """

    p, n = prime_power(cases.q)
    spec = make_field(p, n, budget=budget)
    if theta_rank:
        primitives = spec.primitive_element_codes()
        spec = with_primitive(spec, primitives[theta_rank % len(primitives)])

    rows = []
    for family in cases.families:
        try:
            rows.append(run_case(spec, family, budget, stab_only).row)
        except BudgetExceeded as error:
            rows.append(_skipped_row(spec, family, error))
    return rows


def _sort_key(row: SweepRow) -> tuple[int, int, int]:
    return (row.q, FAMILY_ORDER.index(FamilyName(row.family)), row.r)


def run_sweep(
    max_q: int,
    families: Sequence[FamilyName],
    jobs: int = 1,
    budget: Budget = DEFAULT_BUDGET,
    stab_only: bool = False,
    theta_rank: int = 0,
) -> list[SweepRow]:
    """Runs every admissible case up to max_q.

    With jobs > 1 the field orders are spread over a process pool. Results
    are merged in (q, family, r) order, so the rows do not depend on jobs.

    Raises:
        BudgetExceeded: If max_q is past the field budget.
    """

    if max_q > budget.max_q:
        raise BudgetExceeded("max q", max_q, budget.max_q)

    work = admissible_cases(max_q, families)
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(
                executor.map(
                    run_field,
                    work,
                    [budget] * len(work),
                    [stab_only] * len(work),
                    [theta_rank] * len(work),
                )
            )
    else:
        results = [run_field(cases, budget, stab_only, theta_rank) for cases in work]

    rows = [row for field_rows in results for row in field_rows]
    return sorted(rows, key=_sort_key)
