"""Modulus search, validation and the field text form"""

import itertools
import re
from functools import lru_cache
from typing import Optional, Sequence, Type

import galois
import sympy

from exceptions import NotPrime, ReducibleModulus

# Text form of a field: p^n:c0,c1,...,cn with modulus coefficients low degree first
_FIELD_TEXT = re.compile(r"^\s*(\d+)\^(\d+)(?::([\d,\s]+))?\s*$")


@lru_cache(maxsize=None)
def prime_field(p: int) -> Type[galois.FieldArray]:
    """Returns the galois class of the prime field GF(p)"""

    return galois.GF(p)


def modulus_poly(p: int, coefficients: Sequence[int]) -> galois.Poly:
    """Converts low-degree-first coefficients to a galois polynomial over GF(p)"""

    return galois.Poly(list(coefficients), field=prime_field(p), order="asc")


def is_irreducible_modulus(p: int, coefficients: Sequence[int]) -> bool:
    """Checks a low-degree-first coefficient vector is a monic irreducible.

    Args:
        p (int): Characteristic of the prime field.
        coefficients (Sequence[int]): n + 1 coefficients, constant term first.

    Returns:
        bool: True if the polynomial is monic, of degree at least one and
            irreducible over GF(p).
    """

    if len(coefficients) < 2 or coefficients[-1] != 1:
        return False
    if any(not 0 <= coefficient < p for coefficient in coefficients):
        return False
    return modulus_poly(p, coefficients).is_irreducible()


@lru_cache(maxsize=None)
def least_irreducible_modulus(p: int, n: int) -> tuple[int, ...]:
    """Finds the lexicographically least monic irreducible of degree n.

    Coefficient vectors are compared constant term first, so for GF(9) the
    search settles on x^2 + 1 and for GF(4) on x^2 + x + 1.

    Raises:
        NotPrime: If p is not a prime.
    """

    if not sympy.isprime(p):
        raise NotPrime(p)

    for lower in itertools.product(range(p), repeat=n):
        candidate = (*lower, 1)
        if modulus_poly(p, candidate).is_irreducible():
            return candidate

    # Irreducibles exist in every degree
    raise AssertionError(f"No irreducible of degree {n} over GF({p})")


def check_modulus(p: int, n: int, coefficients: Sequence[int]) -> tuple[int, ...]:
    """Validates a user supplied modulus.

    Raises:
        ReducibleModulus: If the polynomial is not monic of degree n or factors.

    Returns:
        tuple[int, ...]: The coefficients as a tuple.
    """

    modulus = tuple(int(coefficient) for coefficient in coefficients)
    if len(modulus) != n + 1 or not is_irreducible_modulus(p, modulus):
        raise ReducibleModulus(p, modulus)
    return modulus


def format_field_text(p: int, n: int, modulus: Sequence[int]) -> str:
    """Renders the p^n:c0,...,cn text form used in flags and export headers"""

    return f"{p}^{n}:" + ",".join(str(coefficient) for coefficient in modulus)


def parse_field_text(text: str) -> tuple[int, int, Optional[tuple[int, ...]]]:
    """Splits a field text form into its parts.

    The modulus part is optional, "7^1" alone selects the default modulus.

    Raises:
        ValueError: If the text is not of the form p^n or p^n:c0,...,cn.

    Returns:
        tuple[int, int, Optional[tuple[int, ...]]]: (p, n, modulus or None).
    """

    match = _FIELD_TEXT.match(text)
    if not match:
        raise ValueError(f"Field text {text!r} is not of the form p^n:c0,...,cn")

    p, n = int(match.group(1)), int(match.group(2))
    modulus = None
    if match.group(3):
        modulus = tuple(
            int(part) for part in match.group(3).split(",") if part.strip() != ""
        )
    return p, n, modulus


def prime_power(q: int) -> tuple[int, int]:
    """Splits a prime power into (p, n).

    Raises:
        ValueError: If q is not a prime power.
    """

    factors = sympy.factorint(q)
    if q < 2 or len(factors) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, n),) = factors.items()
    return int(p), int(n)


def prime_powers(limit: int, start: int = 2) -> list[int]:
    """Lists the prime powers q with start <= q <= limit in increasing order"""

    return [
        q for q in range(max(start, 2), limit + 1) if len(sympy.factorint(q)) == 1
    ]


def power_exponent(p: int, value: int) -> Optional[int]:
    """m >= 1 with value = p^m, or None when value is not such a power"""

    m = 0
    while value > 1 and value % p == 0:
        value //= p
        m += 1
    return m if value == 1 and m >= 1 else None
