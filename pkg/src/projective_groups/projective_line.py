"""Points of the projective line GF(q) u {inf} and their text encoding"""

from data_types import Point
from finite_fields import FieldSpec

INFINITY_TOKEN = "inf"


def points(spec: FieldSpec) -> range:
    """All q + 1 points, finite ones in encoding order and infinity last"""
    return range(spec.q + 1)


def is_infinity(spec: FieldSpec, pt: Point) -> bool:
    return pt == spec.q


def point_to_text(spec: FieldSpec, pt: Point) -> str:
    return INFINITY_TOKEN if is_infinity(spec, pt) else str(pt)


def point_from_text(spec: FieldSpec, text: str) -> Point:
    """Parses a decimal encoding or the inf token.

    Raises:
        ValueError: If the text names no point of the line.
    """

    text = text.strip()
    if text == INFINITY_TOKEN:
        return spec.q

    pt = int(text)
    if not 0 <= pt < spec.q:
        raise ValueError(f"{text!r} is not a point of the line over GF({spec.q})")
    return pt
