"""Contains the FieldSpec class, exact arithmetic in GF(p^n)"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

import galois
import numpy as np
import sympy

from data_types import Encoded
from exceptions import (
    BadResidueIndex,
    BudgetExceeded,
    DivisionByZero,
    NotPrime,
    OutOfRange,
    PreconditionFailed,
)
from finite_fields.polynomials import (
    check_modulus,
    format_field_text,
    least_irreducible_modulus,
    modulus_poly,
    parse_field_text,
)
from settings import DEFAULT_BUDGET, Budget

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FieldElement:
    """Element of GF(p^n) as its coefficient vector.

    Attributes:
        coeffs (tuple[int, ...]): n coefficients in [0, p), coefficient j
            multiplies the j-th power of the modulus root.
    """

    coeffs: tuple[int, ...]


@dataclass(frozen=True)
class FieldTables:
    """Lookup tables over integer encodings, built once per field.

    The numpy arrays serve vectorized scans and the list copies serve scalar
    code, where indexing a nested list is much cheaper than a numpy scalar.
    Index 0 of inv holds 0 as a placeholder.
    """

    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray
    add_rows: list[list[int]]
    mul_rows: list[list[int]]
    neg_list: list[int]
    inv_list: list[int]

    @staticmethod
    def from_galois(galois_field: type[galois.FieldArray], q: int) -> "FieldTables":
        elements = galois_field(np.arange(q))

        add = (elements[:, None] + elements[None, :]).view(np.ndarray).astype(np.int64)
        mul = (elements[:, None] * elements[None, :]).view(np.ndarray).astype(np.int64)
        neg = (-elements).view(np.ndarray).astype(np.int64)
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = np.reciprocal(elements[1:]).view(np.ndarray)

        return FieldTables(
            add=add,
            mul=mul,
            neg=neg,
            inv=inv,
            add_rows=add.tolist(),
            mul_rows=mul.tolist(),
            neg_list=neg.tolist(),
            inv_list=inv.tolist(),
        )


@dataclass(frozen=True)
class FieldSpec:
    """A concrete finite field GF(p^n) with a fixed modulus and primitive element.

    Elements are handled as FieldElement values by the public operations and
    as integer encodings (sum of coeffs[j] * p^j) by the *_code helpers that
    the group and orbit code uses in its inner loops.

    Attributes:
        p (int): Characteristic.
        n (int): Extension degree.
        modulus (tuple[int, ...]): Monic irreducible of degree n, n + 1
            coefficients with the constant term first.
        theta_code (Encoded): Encoding of the primitive element theta.
        tables (FieldTables): Arithmetic lookup tables.
    """

    p: int
    n: int
    modulus: tuple[int, ...]
    theta_code: Encoded
    tables: FieldTables = field(repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p**self.n

    @property
    def infinity(self) -> int:
        """Point encoding of infinity, one past the last field element"""
        return self.q

    @property
    def theta(self) -> FieldElement:
        return self.decode(self.theta_code)

    @property
    def text(self) -> str:
        """The p^n:c0,...,cn text form of this field"""
        return format_field_text(self.p, self.n, self.modulus)

    # Encoding

    def encode(self, x: FieldElement) -> Encoded:
        """Maps an element to its integer encoding in [0, q)"""

        code = 0
        for coefficient in reversed(x.coeffs):
            code = code * self.p + coefficient
        return code

    def decode(self, i: int) -> FieldElement:
        """Maps an integer encoding back to its element.

        Raises:
            OutOfRange: If i is not in [0, q).
        """

        if not 0 <= i < self.q:
            raise OutOfRange(i, self.q)

        coeffs = []
        for _ in range(self.n):
            i, coefficient = divmod(i, self.p)
            coeffs.append(coefficient)
        return FieldElement(tuple(coeffs))

    def element(self, coeffs: Sequence[int]) -> FieldElement:
        """Builds an element from up to n coefficients, reduced mod p.

        Raises:
            PreconditionFailed: If more than n coefficients are given.
        """

        if len(coeffs) > self.n:
            raise PreconditionFailed(
                "element", f"{len(coeffs)} coefficients given, at most {self.n} fit"
            )
        padded = [int(c) % self.p for c in coeffs] + [0] * (self.n - len(coeffs))
        return FieldElement(tuple(padded))

    def from_int(self, value: int) -> FieldElement:
        """Embeds an integer through the prime subfield"""
        return self.decode(value % self.p)

    def elements(self) -> list[FieldElement]:
        """Every element in encoding order"""
        return [self.decode(i) for i in range(self.q)]

    @property
    def zero(self) -> FieldElement:
        return self.decode(0)

    @property
    def one(self) -> FieldElement:
        return self.decode(1)

    # Arithmetic on encodings

    def power_code(self, x: Encoded, e: int) -> Encoded:
        """Raises an encoded element to an integer power by square and multiply.

        Exponents of nonzero bases are reduced mod q - 1.

        Raises:
            DivisionByZero: If x is zero and e is negative.
        """

        if x == 0:
            if e < 0:
                raise DivisionByZero()
            return 1 if e == 0 else 0

        e %= self.q - 1
        mul = self.tables.mul_rows
        result, base = 1, x
        while e:
            if e & 1:
                result = mul[result][base]
            base = mul[base][base]
            e >>= 1
        return result

    def inv_code(self, x: Encoded) -> Encoded:
        if x == 0:
            raise DivisionByZero()
        return self.tables.inv_list[x]

    def order_code(self, x: Encoded) -> int:
        """Multiplicative order of an encoded element via the divisors of q - 1"""

        if x == 0:
            raise DivisionByZero()
        for divisor in sympy.divisors(self.q - 1):
            if self.power_code(x, divisor) == 1:
                return int(divisor)

        # x^(q-1) = 1 always holds, so a divisor is found above
        raise AssertionError("Lagrange's theorem failed")

    def is_square_code(self, x: Encoded) -> bool:
        if x == 0:
            raise DivisionByZero()
        if self.p == 2:
            return True
        return self.power_code(x, (self.q - 1) // 2) == 1

    # Arithmetic on elements

    def add(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return self.decode(self.tables.add_rows[self.encode(x)][self.encode(y)])

    def sub(self, x: FieldElement, y: FieldElement) -> FieldElement:
        negated = self.tables.neg_list[self.encode(y)]
        return self.decode(self.tables.add_rows[self.encode(x)][negated])

    def neg(self, x: FieldElement) -> FieldElement:
        return self.decode(self.tables.neg_list[self.encode(x)])

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return self.decode(self.tables.mul_rows[self.encode(x)][self.encode(y)])

    def inv(self, x: FieldElement) -> FieldElement:
        """Multiplicative inverse.

        Raises:
            DivisionByZero: If x is zero.
        """

        return self.decode(self.inv_code(self.encode(x)))

    def power(self, x: FieldElement, e: int) -> FieldElement:
        """x to the integer power e, negative exponents through the inverse.

        Raises:
            DivisionByZero: If x is zero and e is negative.
        """

        return self.decode(self.power_code(self.encode(x), e))

    def multiplicative_order(self, x: FieldElement) -> int:
        """Least e >= 1 with x^e = 1.

        Raises:
            DivisionByZero: If x is zero.
        """

        return self.order_code(self.encode(x))

    def is_square(self, x: FieldElement) -> bool:
        """Whether a nonzero x is a square, always true in characteristic 2.

        Raises:
            DivisionByZero: If x is zero.
        """

        return self.is_square_code(self.encode(x))

    def frobenius(self, x: FieldElement, m: int) -> FieldElement:
        """x^(p^m) for 0 < m <= n.

        Raises:
            PreconditionFailed: If m is outside (0, n].
        """

        if not 0 < m <= self.n:
            raise PreconditionFailed("frobenius", f"m = {m} is outside (0, {self.n}]")
        return self.power(x, self.p**m)

    def is_in_subfield(self, x: FieldElement, m: int) -> bool:
        """Whether x lies in the fixed field of x -> x^(p^m)"""

        return self.frobenius(x, m) == x

    def power_subgroup(self, r: int) -> list[FieldElement]:
        """The subgroup <theta^r> of order k = (q - 1) / r in encoding order.

        Raises:
            BadResidueIndex: If r is not a positive divisor of q - 1.
        """

        return [self.decode(code) for code in self.power_subgroup_codes(r)]

    def power_subgroup_codes(self, r: int) -> list[Encoded]:
        if r < 1 or (self.q - 1) % r != 0:
            raise BadResidueIndex(r, self.q)

        beta = self.power_code(self.theta_code, r)
        mul = self.tables.mul_rows
        codes = [1]
        current = beta
        while current != 1:
            codes.append(current)
            current = mul[current][beta]
        return sorted(codes)

    def subfield_codes(self, m: int) -> list[Encoded]:
        """Encodings of the fixed points of x -> x^(p^m), zero included.

        Raises:
            PreconditionFailed: If m is outside (0, n].
        """

        if not 0 < m <= self.n:
            raise PreconditionFailed("subfield", f"m = {m} is outside (0, {self.n}]")

        exponent = self.p**m
        return [x for x in range(self.q) if self.power_code(x, exponent) == x]

    def primitive_element_codes(self) -> list[Encoded]:
        """Every primitive element in encoding order"""

        return [x for x in range(1, self.q) if self.order_code(x) == self.q - 1]


@lru_cache(maxsize=None)
def _field_tables(p: int, n: int, modulus: tuple[int, ...]) -> FieldTables:
    if n == 1:
        galois_field = galois.GF(p)
    else:
        galois_field = galois.GF(p**n, irreducible_poly=modulus_poly(p, modulus))
    return FieldTables.from_galois(galois_field, p**n)


def make_field(
    p: int,
    n: int,
    modulus: Optional[Sequence[int]] = None,
    budget: Budget = DEFAULT_BUDGET,
) -> FieldSpec:
    """Builds GF(p^n) with a deterministic modulus and primitive element.

    Without a modulus the lexicographically least monic irreducible is used.
    Theta is the least element, in encoding order, of multiplicative order
    q - 1.

    Args:
        p (int): Characteristic, must be prime.
        n (int): Extension degree, at least 1.
        modulus (Optional[Sequence[int]]): Monic degree n polynomial as n + 1
            coefficients, constant term first. Defaults to None.
        budget (Budget): Limits on q. Defaults to the built-in budget.

    Raises:
        NotPrime: If p is not a prime.
        ReducibleModulus: If the given modulus is not a monic irreducible of
            degree n.
        BudgetExceeded: If q(q^2 - 1) goes past the enumeration budget.

    Returns:
        FieldSpec: The constructed field.
    """

    if not sympy.isprime(p):
        raise NotPrime(p)
    if n < 1:
        raise PreconditionFailed("make_field", f"degree n = {n} must be at least 1")

    q = p**n
    if q * (q * q - 1) > budget.max_group_order:
        raise BudgetExceeded("field order", q, budget.max_q)

    if modulus is None:
        chosen = least_irreducible_modulus(p, n)
    else:
        chosen = check_modulus(p, n, modulus)

    tables = _field_tables(p, n, chosen)
    spec = FieldSpec(p=p, n=n, modulus=chosen, theta_code=0, tables=tables)

    theta_code = next(x for x in range(1, q) if spec.order_code(x) == q - 1)
    logger.debug("Built GF(%d) modulus %s theta %d", q, spec.text, theta_code)

    return FieldSpec(p=p, n=n, modulus=chosen, theta_code=theta_code, tables=tables)


def with_primitive(spec: FieldSpec, theta_code: Encoded) -> FieldSpec:
    """Returns the same field with a different primitive element.

    Raises:
        PreconditionFailed: If theta_code does not have order q - 1.
    """

    if not 0 < theta_code < spec.q or spec.order_code(theta_code) != spec.q - 1:
        raise PreconditionFailed(
            "with_primitive", f"{theta_code} is not a primitive element of GF({spec.q})"
        )
    return FieldSpec(
        p=spec.p,
        n=spec.n,
        modulus=spec.modulus,
        theta_code=theta_code,
        tables=spec.tables,
    )


def parse_field(text: str, budget: Budget = DEFAULT_BUDGET) -> FieldSpec:
    """Builds a field from its p^n:c0,...,cn text form.

    Raises:
        ValueError: If the text is malformed.
        NotPrime: If p is not a prime.
        ReducibleModulus: If the modulus is not a monic irreducible.
    """

    p, n, modulus = parse_field_text(text)
    return make_field(p, n, modulus, budget)


def format_field(spec: FieldSpec) -> str:
    return spec.text
