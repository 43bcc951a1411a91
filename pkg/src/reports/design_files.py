"""Renders and writes design files: one header line, then one block per line"""

import logging
from pathlib import Path

from designs import BlockFamily
from exceptions import ExportFailed, PreconditionFailed
from finite_fields import FieldSpec, format_field
from sweeps import CaseResult

logger = logging.getLogger(__name__)


def design_header(spec: FieldSpec, family: BlockFamily, result: CaseResult) -> str:
    """The comment line naming the field, family and design parameters.

    Raises:
        PreconditionFailed: If the case was run without triple counting.
    """

    if result.params is None or result.orbit is None:
        raise PreconditionFailed("export", "the case was run in stabilizer-only mode")

    params = result.params
    stab = result.classification.primary.label(spec.p)
    return (
        f"# field={format_field(spec)} family={family.name.value} r={family.r}"
        f" t={params.t} v={params.v} k={params.k} lambda={params.lambda_}"
        f" stab={stab}:{result.stabilizer.order}"
    )


def render_design_file(
    spec: FieldSpec, family: BlockFamily, result: CaseResult
) -> str:
    """Header followed by every orbit block, in sorted block order"""

    header = design_header(spec, family, result)
    assert result.orbit is not None
    return "\n".join([header, *result.orbit.to_lines(spec)]) + "\n"


def write_design_file(path: str | Path, text: str) -> None:
    """Writes a rendered design file.

    Raises:
        ExportFailed: If the file cannot be written.
    """

    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as error:
        raise ExportFailed(str(path), error.strerror or str(error)) from error
    logger.info("Wrote %s", path)
