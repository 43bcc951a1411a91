"""Contains the Moebius class and the operations of PGL(2,q) on the projective line"""

from dataclasses import dataclass

from data_types import Encoded, GroupTag, Permutation, Point
from exceptions import PreconditionFailed
from finite_fields import FieldElement, FieldSpec


@dataclass(frozen=True, order=True)
class Moebius:
    """Canonical fractional-linear map x -> (ax + b) / (cx + d).

    Coefficients are held as field encodings. The first nonzero of
    (a, b, c, d) is always 1, so two maps are equal exactly when their
    coefficients are, and the dataclass ordering is the lexicographic order
    on encoded coefficients.

    Attributes:
        a (Encoded): Coefficient of x in the numerator.
        b (Encoded): Constant of the numerator.
        c (Encoded): Coefficient of x in the denominator.
        d (Encoded): Constant of the denominator.
    """

    a: Encoded
    b: Encoded
    c: Encoded
    d: Encoded

    def as_tuple(self) -> tuple[Encoded, Encoded, Encoded, Encoded]:
        return (self.a, self.b, self.c, self.d)

    def coefficients(self, spec: FieldSpec) -> tuple[FieldElement, ...]:
        """The four coefficients as field elements"""
        return tuple(spec.decode(code) for code in self.as_tuple())

    def to_text(self) -> str:
        """The a,b,c,d text encoding"""
        return ",".join(str(code) for code in self.as_tuple())


def determinant_code(
    spec: FieldSpec, a: Encoded, b: Encoded, c: Encoded, d: Encoded
) -> Encoded:
    add, mul, neg = spec.tables.add_rows, spec.tables.mul_rows, spec.tables.neg_list
    return add[mul[a][d]][neg[mul[b][c]]]


def canonical(
    spec: FieldSpec, a: Encoded, b: Encoded, c: Encoded, d: Encoded
) -> Moebius:
    """Scales (a, b, c, d) so that its first nonzero entry is 1.

    Raises:
        PreconditionFailed: If ad - bc = 0.
    """

    if determinant_code(spec, a, b, c, d) == 0:
        raise PreconditionFailed("moebius", f"({a},{b},{c},{d}) has ad - bc = 0")

    lead = a if a != 0 else b
    if lead != 1:
        scale = spec.tables.inv_list[lead]
        mul = spec.tables.mul_rows[scale]
        a, b, c, d = mul[a], mul[b], mul[c], mul[d]
    return Moebius(a, b, c, d)


def from_elements(
    spec: FieldSpec, a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement
) -> Moebius:
    """Builds the canonical map from four field elements"""

    codes = (spec.encode(a), spec.encode(b), spec.encode(c), spec.encode(d))
    return canonical(spec, *codes)


def from_text(spec: FieldSpec, text: str) -> Moebius:
    """Parses the a,b,c,d text encoding and canonicalizes it.

    Raises:
        ValueError: If the text does not hold four encodings in [0, q).
    """

    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"Moebius text {text!r} needs four comma separated values")

    codes = [int(part) for part in parts]
    if any(not 0 <= code < spec.q for code in codes):
        raise ValueError(f"Moebius text {text!r} has values outside [0, {spec.q})")
    return canonical(spec, *codes)


def identity() -> Moebius:
    return Moebius(1, 0, 0, 1)


def apply(spec: FieldSpec, m: Moebius, pt: Point) -> Point:
    """Image of a point of the projective line, infinity encoded as q.

    Infinity goes to a/c, or to itself when c = 0. A finite pole maps to
    infinity.
    """

    tables = spec.tables
    add, mul, inv = tables.add_rows, tables.mul_rows, tables.inv_list

    if pt == spec.q:
        return spec.q if m.c == 0 else mul[m.a][inv[m.c]]

    denominator = add[mul[m.c][pt]][m.d]
    if denominator == 0:
        return spec.q
    return mul[add[mul[m.a][pt]][m.b]][inv[denominator]]


def compose(spec: FieldSpec, m1: Moebius, m2: Moebius) -> Moebius:
    """The map m1 after m2, from the matrix product"""

    add, mul = spec.tables.add_rows, spec.tables.mul_rows
    a = add[mul[m1.a][m2.a]][mul[m1.b][m2.c]]
    b = add[mul[m1.a][m2.b]][mul[m1.b][m2.d]]
    c = add[mul[m1.c][m2.a]][mul[m1.d][m2.c]]
    d = add[mul[m1.c][m2.b]][mul[m1.d][m2.d]]
    return canonical(spec, a, b, c, d)


def inverse(spec: FieldSpec, m: Moebius) -> Moebius:
    """Inverse through the adjugate (d, -b, -c, a)"""

    neg = spec.tables.neg_list
    return canonical(spec, m.d, neg[m.b], neg[m.c], m.a)


def determinant(spec: FieldSpec, m: Moebius) -> Encoded:
    return determinant_code(spec, m.a, m.b, m.c, m.d)


def is_in_psl(spec: FieldSpec, m: Moebius) -> bool:
    """Whether the canonical representative has a square determinant.

    Rescaling by s multiplies the determinant by s^2, so the answer does not
    depend on the representative. Always true in characteristic 2.
    """

    return spec.is_square_code(determinant(spec, m))


def element_order(spec: FieldSpec, m: Moebius) -> int:
    """Least e >= 1 with m^e = identity, by iterated composition"""

    one = identity()
    current, order = m, 1
    while current != one:
        current = compose(spec, m, current)
        order += 1
    return order


def permutation(spec: FieldSpec, m: Moebius) -> Permutation:
    """Images of the points 0..q, infinity last"""

    return tuple(apply(spec, m, pt) for pt in range(spec.q + 1))


def scaling(spec: FieldSpec, factor: Encoded) -> Moebius:
    """x -> factor * x"""
    return canonical(spec, factor, 0, 0, 1)


def translation(spec: FieldSpec, shift: Encoded) -> Moebius:
    """x -> x + shift"""
    return canonical(spec, 1, shift, 0, 1)


def reciprocal() -> Moebius:
    """x -> 1 / x"""
    return Moebius(0, 1, 1, 0)


def standard_generators(spec: FieldSpec, r: int) -> tuple[Moebius, Moebius]:
    """The maps x -> theta^r x and x -> 1/x, which both fix <theta^r> setwise"""

    if r < 1:
        raise PreconditionFailed("standard_generators", f"r = {r} must be positive")
    return (scaling(spec, spec.power_code(spec.theta_code, r)), reciprocal())


def group_generators(spec: FieldSpec, which: GroupTag) -> list[Moebius]:
    """A small generating set of PGL(2,q) or PSL(2,q).

    PGL uses x -> theta x, x -> x + 1 and x -> 1/x. For odd q, PSL replaces
    them by x -> theta^2 x, x -> x + 1 and x -> -1/x, which all have square
    determinant.
    """

    if which == GroupTag.PSL and spec.p != 2:
        theta_squared = spec.power_code(spec.theta_code, 2)
        minus_one = spec.tables.neg_list[1]
        return [
            scaling(spec, theta_squared),
            translation(spec, 1),
            canonical(spec, 0, minus_one, 1, 0),
        ]

    return [scaling(spec, spec.theta_code), translation(spec, 1), reciprocal()]
