"""Contains protocols for type checking"""

from typing import Any, ClassVar, Protocol


class IsDataclass(Protocol):
    """Protocol for checking if a class is a dataclass.

    The report renderers take any dataclass row and serialize it with asdict.
    """

    __dataclass_fields__: ClassVar[dict[str, Any]]
