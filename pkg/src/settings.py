"""Stores the computation limits read from the environment"""

import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from exceptions import ConfigurationError

# Classification limit for small field budgets
_CLASSIFY_FLOOR = 10_000


def _read_int(name: str, default: Optional[int]) -> Optional[int]:
    """Reads a positive integer environment variable.

    Raises:
        ConfigurationError: If the value is not a positive integer.
    """

    raw = os.getenv(name)
    if raw is None or raw == "":
        return default

    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(name, raw)

    if value < 1:
        raise ConfigurationError(name, raw)
    return value


def _read_level(name: str, default: str) -> str:
    """Reads a logging level name such as INFO or DEBUG.

    Raises:
        ConfigurationError: If the value is not a known level name.
    """

    raw = os.getenv(name) or default
    level = raw.upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ConfigurationError(name, raw)
    return level


@dataclass(frozen=True)
class Budget:
    """Limits every exhaustive computation has to respect.

    Attributes:
        max_q (int): Largest field order that may be built. Bounds the
            enumeration budget q(q^2 - 1).
        verify_max_q (int): Largest field order for full verification
            (orbit closure and triple counting).
        max_orbit_blocks (int): Largest orbit the closure may produce.
        max_classify_order (int, optional): Largest stabilizer that is
            classified. Unset means classify_limit picks it from max_q.
        log_level (str): Level for the root logger.
    """

    max_q: int = 128
    verify_max_q: int = 81
    max_orbit_blocks: int = 1_000_000
    max_classify_order: Optional[int] = None
    log_level: str = "WARNING"

    @property
    def max_group_order(self) -> int:
        return self.max_q * (self.max_q**2 - 1)

    @property
    def classify_limit(self) -> int:
        """Largest classified order, at least the affine order q(q - 1) at max_q"""

        if self.max_classify_order is not None:
            return self.max_classify_order
        return max(_CLASSIFY_FLOOR, self.max_q * (self.max_q - 1))

    @staticmethod
    def from_env() -> "Budget":
        """Builds a budget from the DESIGNS_* environment variables.

        Raises:
            ConfigurationError: If a variable is set but malformed.
        """

        load_dotenv()
        defaults = Budget()

        return Budget(
            max_q=_read_int("DESIGNS_MAX_Q", defaults.max_q),
            verify_max_q=_read_int("DESIGNS_VERIFY_MAX_Q", defaults.verify_max_q),
            max_orbit_blocks=_read_int(
                "DESIGNS_MAX_ORBIT_BLOCKS", defaults.max_orbit_blocks
            ),
            max_classify_order=_read_int(
                "DESIGNS_MAX_CLASSIFY_ORDER", defaults.max_classify_order
            ),
            log_level=_read_level("DESIGNS_LOG_LEVEL", defaults.log_level),
        )


DEFAULT_BUDGET = Budget()
