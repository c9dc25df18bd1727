from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from src.errors import InconsistentDescriptorError, InvalidArgumentError


class NonCuspEnds(Enum):
    """Shape of the space of non-cuspidal ends"""
    ZERO = "zero"
    ONE = "one"
    TWO = "two"
    CANTOR = "cantor"
    MANY_ISOLATED = "many_isolated"  # piu' di due bouts, non un Cantor

    @classmethod
    def from_string(cls, value: str) -> 'NonCuspEnds':
        try:
            return cls(value.lower())
        except ValueError:
            raise InvalidArgumentError(f"Unknown non-cusp ends class: {value}")


class CuspEnds(Enum):
    """Cuspidal ends: none, finitely many, or infinitely many dense / not dense in the ends"""
    NONE = "none"
    FINITE = "finite"
    INFINITE_DENSE = "infinite_dense"
    INFINITE_SPARSE = "infinite_sparse"

    @classmethod
    def from_string(cls, value: str) -> 'CuspEnds':
        try:
            return cls(value.lower())
        except ValueError:
            raise InvalidArgumentError(f"Unknown cusp ends class: {value}")


@dataclass(frozen=True)
class EndsDescriptor:
    """End-space invariants of a surface.

    total_genus is None for infinite genus. The two genus flags refer to the
    non-cuspidal ends; finite_type = (genus, punctures) for surfaces of finite type.
    """
    total_genus: Optional[int]
    noncusp_ends: NonCuspEnds
    every_end_infinite_genus: bool = False
    some_end_genus_zero: bool = False
    cusp_ends: CuspEnds = CuspEnds.NONE
    cusp_count: Optional[int] = None
    finite_type: Optional[Tuple[int, int]] = None

    @property
    def infinite_type(self) -> bool:
        return self.noncusp_ends != NonCuspEnds.ZERO

    def validate(self) -> None:
        """Raises InconsistentDescriptorError if the fields contradict each other"""
        if self.total_genus is not None and self.total_genus < 0:
            raise InconsistentDescriptorError(f"negative genus {self.total_genus}")
        if self.every_end_infinite_genus and self.total_genus is not None:
            raise InconsistentDescriptorError("every end has infinite genus but the total genus is finite")
        if (self.noncusp_ends == NonCuspEnds.ZERO) != (self.finite_type is not None):
            raise InconsistentDescriptorError("finite_type must be given exactly when there are no non-cusp ends")
        if self.infinite_type and self.every_end_infinite_genus == self.some_end_genus_zero:
            raise InconsistentDescriptorError(
                "exactly one of every_end_infinite_genus and some_end_genus_zero must hold")
        if self.cusp_ends == CuspEnds.FINITE and (self.cusp_count is None or self.cusp_count < 1):
            raise InconsistentDescriptorError("finitely many cusps require a positive cusp_count")
        if self.finite_type is not None:
            genus, punctures = self.finite_type
            if self.total_genus != genus:
                raise InconsistentDescriptorError(f"finite type genus {genus} differs from total genus")
            if self.cusp_ends in (CuspEnds.INFINITE_DENSE, CuspEnds.INFINITE_SPARSE):
                raise InconsistentDescriptorError("a finite-type surface has finitely many cusps")
            if punctures != (self.cusp_count or 0):
                raise InconsistentDescriptorError(f"finite type has {punctures} punctures, cusp_count differs")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "total_genus": "infinite" if self.total_genus is None else self.total_genus,
            "noncusp_ends": self.noncusp_ends.value,
            "every_end_infinite_genus": self.every_end_infinite_genus,
            "some_end_genus_zero": self.some_end_genus_zero,
            "cusp_ends": self.cusp_ends.value,
            "cusp_count": self.cusp_count,
            "finite_type": list(self.finite_type) if self.finite_type else None,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'EndsDescriptor':
        genus = data.get('total_genus', 0)
        finite_type = data.get('finite_type')
        return cls(
            total_genus=None if genus == "infinite" else genus,
            noncusp_ends=NonCuspEnds.from_string(data['noncusp_ends']),
            every_end_infinite_genus=bool(data.get('every_end_infinite_genus', False)),
            some_end_genus_zero=bool(data.get('some_end_genus_zero', False)),
            cusp_ends=CuspEnds.from_string(data.get('cusp_ends', 'none')),
            cusp_count=data.get('cusp_count'),
            finite_type=tuple(finite_type) if finite_type else None,
        )


def finite_type_descriptor(genus: int, punctures: int) -> EndsDescriptor:
    return EndsDescriptor(
        total_genus=genus,
        noncusp_ends=NonCuspEnds.ZERO,
        cusp_ends=CuspEnds.FINITE if punctures else CuspEnds.NONE,
        cusp_count=punctures or None,
        finite_type=(genus, punctures),
    )
