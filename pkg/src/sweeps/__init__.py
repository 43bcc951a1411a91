"""Exports the case pipeline and the sweep runner to make them easier to import"""

from sweeps.pipeline import CaseResult, SweepRow, run_case
from sweeps.runner import (
    FAMILY_ORDER,
    FieldCases,
    admissible_cases,
    run_field,
    run_sweep,
)
