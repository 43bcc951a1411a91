"""Contains the SweepRow class and the single case pipeline that produces it"""

import logging
import time
from dataclasses import dataclass, field
from typing import Optional

from block_orbits import (
    PGLSub,
    check_divisibility,
    check_orbit_length_lemmas,
    check_orbit_stabilizer,
    check_psl_subgroup_conditions,
    classify_subgroup,
    is_union_of_point_orbits,
    orbit_of_block,
    point_orbit_lengths,
    satisfies_dickson_constraints,
    stabilizer_of_block,
)
from block_orbits.blocks import Orbit, Stabilizer
from block_orbits.classification import Classification
from data_types import GroupTag
from designs import (
    BlockFamily,
    DesignParams,
    SubgroupOnly,
    SubgroupZero,
    build_block,
    check_a4_witness,
    check_block_is_subfield,
    check_remark_equivalence,
    check_simplicity,
    check_subfield_divisibility,
    check_subfield_image,
    lambda_from_stabilizer,
    predict,
    subfield_block,
    theorem_case,
    verify_design,
)
from exceptions import UnsupportedType
from finite_fields import FieldSpec
from projective_groups import group_generators, group_order, group_table
from settings import DEFAULT_BUDGET, Budget

logger = logging.getLogger(__name__)


@dataclass
class SweepRow:
    """Outcome of one (q, family, r) case.

    match holds when the counted, formula and predicted lambdas agree and the
    stabilizer has the predicted type. A stabilizer-only row has no counted
    lambda. checks holds the lemma and witness results, keyed by name.
    """

    q: int
    p: int
    n: int
    family: str
    r: int
    k: int
    blocksize: int
    orbit_size: int
    stab_order: int
    stab_type: str
    predicted_type: str
    case: str
    lambda_counted: Optional[int]
    lambda_formula: int
    lambda_predicted: int
    match: bool
    checks: dict[str, bool] = field(default_factory=dict)
    status: str = "ok"
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        """Whether the row matched and every extra check passed"""
        return self.status == "skipped" or (self.match and all(self.checks.values()))


@dataclass
class CaseResult:
    """Everything the pipeline computed for one case, for export"""

    row: SweepRow
    stabilizer: Stabilizer
    classification: Classification
    orbit: Optional[Orbit] = None
    params: Optional[DesignParams] = None


def _lemma_holds(
    classification: Classification, lengths: list[int], spec: FieldSpec
) -> bool:
    try:
        return check_orbit_length_lemmas(classification.primary, lengths, spec)
    except UnsupportedType:
        return False


def _witness_checks(
    spec: FieldSpec, family: BlockFamily, case: str, stabilizer: Stabilizer
) -> dict[str, bool]:
    """Witness map and subfield checks for the cases that have them"""

    checks: dict[str, bool] = {}
    k = family.k(spec)

    if isinstance(family, SubgroupOnly) and case == "subfield":
        checks["subfield_divisibility"] = check_subfield_divisibility(spec, k, family)
        if spec.p == 2:
            logger.info(
                "q=%d k=%d: stabilizer of order %d in characteristic 2",
                spec.q,
                k,
                stabilizer.order,
            )
        else:
            checks["subfield_witness"] = check_subfield_image(spec, family.r)

    if isinstance(family, SubgroupZero) and case == "a4":
        checks["a4_witness"] = check_a4_witness(spec, family.r, stabilizer)
        if spec.p == 2:
            checks["remark_equivalence"] = check_remark_equivalence(spec, family.r)

    if isinstance(family, SubgroupZero) and case == "semidirect":
        checks["subfield_divisibility"] = check_subfield_divisibility(spec, k, family)
        checks["block_is_subfield"] = check_block_is_subfield(
            spec, stabilizer.block
        )
    return checks


def run_case(
    spec: FieldSpec,
    family: BlockFamily,
    budget: Budget = DEFAULT_BUDGET,
    stab_only: bool = False,
) -> CaseResult:
    """Runs the full pipeline for one case.

    Build the block, compute and classify its stabilizer, then (unless in
    stabilizer-only mode or past the verification budget) compute the orbit
    and count triples. Lambda is compared three ways.

    Args:
        spec (FieldSpec): Field to work over.
        family (BlockFamily): Family and residue index.
        budget (Budget): Computation limits.
        stab_only (bool): Skip the orbit and triple count.

    Raises:
        BadResidueIndex: If r does not divide q - 1.
        KTooSmall: If k is below the family's minimum.
        BudgetExceeded: If a computation is past its budget.

    Returns:
        CaseResult: The row plus the objects it was computed from.
    """

    start = time.perf_counter()

    block = build_block(spec, family)
    k = family.k(spec)
    prediction = predict(spec, family)
    case = theorem_case(spec, family)

    stabilizer = stabilizer_of_block(group_table(spec, GroupTag.PGL, budget), block)
    classification = classify_subgroup(stabilizer, spec, budget)
    lengths = point_orbit_lengths(stabilizer, spec)
    lambda_formula = lambda_from_stabilizer(len(block), stabilizer.order)
    full_order = group_order(spec, GroupTag.PGL)

    checks = {
        "divisibility": check_divisibility(stabilizer.order, len(block)),
        "union_of_point_orbits": is_union_of_point_orbits(stabilizer),
        "orbit_lengths": _lemma_holds(classification, lengths, spec),
        "dickson": satisfies_dickson_constraints(classification.primary, spec),
        "psl_conditions": check_psl_subgroup_conditions(stabilizer, spec, budget),
    }
    checks.update(_witness_checks(spec, family, case, stabilizer))

    orbit, params, lambda_counted = None, None, None
    orbit_size = full_order // stabilizer.order
    if not stab_only and spec.q <= budget.verify_max_q:
        orbit = orbit_of_block(
            spec, group_generators(spec, GroupTag.PGL), block, budget=budget
        )
        params = verify_design(orbit, spec)
        lambda_counted = params.lambda_
        orbit_size = len(orbit)
        checks["orbit_stabilizer"] = check_orbit_stabilizer(
            orbit, stabilizer, full_order
        )
        checks["counting_identity"] = params.satisfies_counting_identity(len(orbit))
        checks["simple"] = check_simplicity(orbit.to_lines(spec))
        if isinstance(prediction.subgroup, PGLSub) and isinstance(family, SubgroupOnly):
            target = subfield_block(spec, prediction.subgroup.m)
            checks["subfield_orbit"] = target in orbit

    lambdas_agree = lambda_formula == prediction.lambda_ and lambda_counted in (
        None,
        lambda_formula,
    )
    row = SweepRow(
        q=spec.q,
        p=spec.p,
        n=spec.n,
        family=family.name.value,
        r=family.r,
        k=k,
        blocksize=len(block),
        orbit_size=orbit_size,
        stab_order=stabilizer.order,
        stab_type=classification.primary.label(spec.p),
        predicted_type=prediction.subgroup.label(spec.p),
        case=case,
        lambda_counted=lambda_counted,
        lambda_formula=lambda_formula,
        lambda_predicted=prediction.lambda_,
        match=lambdas_agree and classification.matches(prediction.subgroup),
        checks=checks,
        elapsed=time.perf_counter() - start,
    )
    if not row.passed:
        row.status = "mismatch"
        logger.warning("Mismatch at q=%d %s r=%d", spec.q, row.family, row.r)

    return CaseResult(row, stabilizer, classification, orbit, params)
