from typing import Optional


class DesignError(Exception):
    """Base class of every error raised by the design toolkit.

    The command line maps any subclass to the usage/precondition exit code.
    """


class ConfigurationError(DesignError):
    """Raised when an environment setting can not be parsed.

    Attributes:
        name: name of the environment variable.
        value: raw value that was found.
    """

    def __init__(self, name: str, value: str, *args: object) -> None:
        """Initializes the exception with the offending setting.

        Args:
            name (str): Name of the environment variable.
            value (str): Raw value that could not be parsed.
        """

        self.name = name
        self.value = value
        super().__init__(*args)

    def __str__(self) -> str:
        return f"Setting {self.name} has invalid value {self.value!r}"


class NotPrime(DesignError):
    """Raised when a field characteristic is not a prime.

    Attributes:
        p: the rejected characteristic.
    """

    def __init__(self, p: int, *args: object) -> None:
        self.p = p
        super().__init__(*args)

    def __str__(self) -> str:
        return f"{self.p} is not a prime"


class ReducibleModulus(DesignError):
    """Raised when a given field modulus factors over its prime field.

    Attributes:
        p: characteristic of the prime field.
        coefficients: modulus coefficients, low degree first.
    """

    def __init__(self, p: int, coefficients: tuple[int, ...], *args: object) -> None:
        self.p = p
        self.coefficients = coefficients
        super().__init__(*args)

    def __str__(self) -> str:
        coefficients = ",".join(map(str, self.coefficients))
        return f"Modulus {coefficients} is not a monic irreducible over GF({self.p})"


class BudgetExceeded(DesignError):
    """Raised when a computation would go past a configured limit.

    Attributes:
        what: the quantity that is too large.
        size: its requested size.
        limit: the configured limit.
    """

    def __init__(self, what: str, size: int, limit: int, *args: object) -> None:
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(*args)

    def __str__(self) -> str:
        return f"{self.what} of size {self.size} exceeds the budget of {self.limit}"


class DivisionByZero(DesignError, ZeroDivisionError):
    """Raised when zero is inverted in a finite field."""

    def __str__(self) -> str:
        return "Zero has no multiplicative inverse"


class OutOfRange(DesignError, IndexError):
    """Raised when an integer encoding does not name a field element.

    Attributes:
        value: the rejected encoding.
        q: the field order.
    """

    def __init__(self, value: int, q: int, *args: object) -> None:
        self.value = value
        self.q = q
        super().__init__(*args)

    def __str__(self) -> str:
        return f"Encoding {self.value} is outside [0, {self.q})"


class BadResidueIndex(DesignError):
    """Raised when a residue index r does not divide q - 1.

    Attributes:
        r: the rejected index.
        q: the field order.
    """

    def __init__(self, r: int, q: int, *args: object) -> None:
        self.r = r
        self.q = q
        super().__init__(*args)

    def __str__(self) -> str:
        return f"r = {self.r} is not a positive divisor of q - 1 = {self.q - 1}"


class KTooSmall(DesignError):
    """Raised when a subgroup order k is below a block family's hypothesis.

    Attributes:
        k: order of the power-residue subgroup.
        minimum: smallest k the family accepts.
        family: name of the block family.
    """

    def __init__(self, k: int, minimum: int, family: str, *args: object) -> None:
        self.k = k
        self.minimum = minimum
        self.family = family
        super().__init__(*args)

    def __str__(self) -> str:
        return f"Family {self.family} needs k >= {self.minimum}, got k = {self.k}"


class NotADesign(DesignError):
    """Raised when the triple counts of an orbit are not constant.

    Attributes:
        min_count: smallest number of blocks through a triple.
        max_count: largest number of blocks through a triple.
    """

    def __init__(self, min_count: int, max_count: int, *args: object) -> None:
        self.min_count = min_count
        self.max_count = max_count
        super().__init__(*args)

    def __str__(self) -> str:
        return (
            f"Triple counts range from {self.min_count} to {self.max_count}, "
            "the blocks do not form a 3-design"
        )


class NonIntegralLambda(DesignError):
    """Raised when k(k-1)(k-2) is not divisible by the stabilizer order.

    Attributes:
        blocksize: size of the block.
        stab_order: order of its stabilizer.
    """

    def __init__(self, blocksize: int, stab_order: int, *args: object) -> None:
        self.blocksize = blocksize
        self.stab_order = stab_order
        super().__init__(*args)

    def __str__(self) -> str:
        k = self.blocksize
        return f"{k * (k - 1) * (k - 2)} is not divisible by |G_B| = {self.stab_order}"


class PreconditionFailed(DesignError):
    """Raised when a witness or arithmetic check is called outside its case.

    Attributes:
        check: name of the check.
        reason: why the case does not apply.
    """

    def __init__(self, check: str, reason: str, *args: object) -> None:
        self.check = check
        self.reason = reason
        super().__init__(*args)

    def __str__(self) -> str:
        return f"{self.check} does not apply: {self.reason}"


class UnsupportedType(DesignError):
    """Raised when an orbit-length rule is requested for an unclassified group.

    Attributes:
        order: order of the unclassified group, if known.
    """

    def __init__(self, order: Optional[int] = None, *args: object) -> None:
        self.order = order
        super().__init__(*args)

    def __str__(self) -> str:
        return f"No orbit-length rule for an unclassified group of order {self.order}"


class EvenCharacteristic(DesignError):
    """Raised when a PSL/PGL orbit relation is requested for q even.

    Attributes:
        q: the field order.
    """

    def __init__(self, q: int, *args: object) -> None:
        self.q = q
        super().__init__(*args)

    def __str__(self) -> str:
        return f"PSL(2,{self.q}) equals PGL(2,{self.q}), so there is no coset to join"


class ExportFailed(DesignError):
    """Raised when a design file cannot be written.

    Attributes:
        path: file that was being written.
        reason: the underlying I/O error message.
    """

    def __init__(self, path: str, reason: str, *args: object) -> None:
        self.path = path
        self.reason = reason
        super().__init__(*args)

    def __str__(self) -> str:
        return f"Could not write {self.path}: {self.reason}"
