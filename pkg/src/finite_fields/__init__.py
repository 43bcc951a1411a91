"""Exports the finite field classes and constructors to make them easier to import"""

from finite_fields.field_spec import (
    FieldElement,
    FieldSpec,
    FieldTables,
    format_field,
    make_field,
    parse_field,
    with_primitive,
)
from finite_fields.polynomials import power_exponent, prime_power, prime_powers
