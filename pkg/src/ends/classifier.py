import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from src.ends.descriptor import CuspEnds, EndsDescriptor, NonCuspEnds
from src.errors import AmbiguousDescriptorError, InvalidArgumentError, NotAdmissibleError

logger = logging.getLogger('belyi-lab')

VIOLATION_CANTOR = "(i) more than two non-cusp ends that do not form a Cantor set"
VIOLATION_GENUS = "(ii) an end of genus zero on a surface of positive genus"
VIOLATION_CUSPS = "(iii) cusp ends are not dense in the ends"


class SurfaceKind(Enum):
    FINITE_TYPE = "FiniteType"
    LOCH_NESS = "LochNess"
    JACOB_LADDER = "JacobLadder"
    CANTOR_TREE = "CantorTree"
    BLOOMING_CANTOR_TREE = "BloomingCantorTree"
    PLANE = "Plane"
    CYLINDER = "Cylinder"

    @classmethod
    def from_string(cls, value: str) -> 'SurfaceKind':
        for kind in cls:
            if kind.value.lower() == value.lower():
                return kind
        raise InvalidArgumentError(f"Unknown surface type: {value}")


INFINITE_KINDS = [
    SurfaceKind.LOCH_NESS,
    SurfaceKind.JACOB_LADDER,
    SurfaceKind.CANTOR_TREE,
    SurfaceKind.BLOOMING_CANTOR_TREE,
    SurfaceKind.PLANE,
    SurfaceKind.CYLINDER,
]


@dataclass(frozen=True)
class SurfaceType:
    """Topological type; punctured means a locally finite set of cusps accumulating at every end"""
    kind: SurfaceKind
    punctured: bool = False
    genus: Optional[int] = None      # solo FiniteType
    punctures: Optional[int] = None  # solo FiniteType

    @property
    def realizable(self) -> bool:
        """Plane and cylinder without punctures carry no non-atomic invariant random subgroup"""
        return not (self.kind in (SurfaceKind.PLANE, SurfaceKind.CYLINDER) and not self.punctured)

    @property
    def name(self) -> str:
        if self.kind == SurfaceKind.FINITE_TYPE:
            return f"FiniteType({self.genus}, {self.punctures})"
        if self.punctured:
            return f"Punctured({self.kind.value})"
        return self.kind.value

    def __str__(self) -> str:
        return self.name

    @classmethod
    def from_name(cls, name: str) -> 'SurfaceType':
        if name.startswith("Punctured(") and name.endswith(")"):
            return cls(SurfaceKind.from_string(name[len("Punctured("):-1]), punctured=True)
        return cls(SurfaceKind.from_string(name))


# tutti i dodici tipi infiniti: sei basi, con o senza punture
CANONICAL_TYPES: List[SurfaceType] = [
    SurfaceType(kind, punctured) for punctured in (False, True) for kind in INFINITE_KINDS
]

_BASE_DESCRIPTORS = {
    SurfaceKind.LOCH_NESS: dict(total_genus=None, noncusp_ends=NonCuspEnds.ONE, every_end_infinite_genus=True),
    SurfaceKind.JACOB_LADDER: dict(total_genus=None, noncusp_ends=NonCuspEnds.TWO, every_end_infinite_genus=True),
    SurfaceKind.CANTOR_TREE: dict(total_genus=0, noncusp_ends=NonCuspEnds.CANTOR, some_end_genus_zero=True),
    SurfaceKind.BLOOMING_CANTOR_TREE: dict(total_genus=None, noncusp_ends=NonCuspEnds.CANTOR,
                                           every_end_infinite_genus=True),
    SurfaceKind.PLANE: dict(total_genus=0, noncusp_ends=NonCuspEnds.ONE, some_end_genus_zero=True),
    SurfaceKind.CYLINDER: dict(total_genus=0, noncusp_ends=NonCuspEnds.TWO, some_end_genus_zero=True),
}


def canonical_descriptor(surface: SurfaceType) -> EndsDescriptor:
    """Built-in descriptor of an infinite-type surface"""
    if surface.kind not in _BASE_DESCRIPTORS:
        raise InvalidArgumentError(f"No canonical descriptor for {surface.name}")
    cusps = CuspEnds.INFINITE_DENSE if surface.punctured else CuspEnds.NONE
    return EndsDescriptor(cusp_ends=cusps, **_BASE_DESCRIPTORS[surface.kind])


@dataclass
class AdmissibilityReport:
    violations: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def admissible(self) -> bool:
        return not self.violations


def check_irs_admissible(d: EndsDescriptor) -> AdmissibilityReport:
    """Properties shared by almost every surface of a non-atomic invariant random subgroup

    Args:
        d: descriptor, validated first
    Returns:
        AdmissibilityReport: empty violations iff all three properties hold
    """
    d.validate()
    report = AdmissibilityReport()
    if not d.infinite_type:
        report.notes.append("finite-type surface: properties hold vacuously (finite volume)")
        return report

    if d.noncusp_ends == NonCuspEnds.MANY_ISOLATED:
        report.violations.append(VIOLATION_CANTOR)
    if d.some_end_genus_zero and d.total_genus != 0:
        report.violations.append(VIOLATION_GENUS)
    if d.cusp_ends in (CuspEnds.FINITE, CuspEnds.INFINITE_SPARSE):
        report.violations.append(VIOLATION_CUSPS)
    return report


def classify(d: EndsDescriptor) -> SurfaceType:
    """Decision table over the admissible descriptors"""
    report = check_irs_admissible(d)
    if not report.admissible:
        raise NotAdmissibleError(report.violations)

    if not d.infinite_type:
        genus, punctures = d.finite_type
        return SurfaceType(SurfaceKind.FINITE_TYPE, genus=genus, punctures=punctures)

    punctured = d.cusp_ends == CuspEnds.INFINITE_DENSE
    table: Dict[tuple, SurfaceKind] = {
        (NonCuspEnds.ONE, True): SurfaceKind.LOCH_NESS,
        (NonCuspEnds.TWO, True): SurfaceKind.JACOB_LADDER,
        (NonCuspEnds.CANTOR, True): SurfaceKind.BLOOMING_CANTOR_TREE,
        (NonCuspEnds.ONE, False): SurfaceKind.PLANE,
        (NonCuspEnds.TWO, False): SurfaceKind.CYLINDER,
        (NonCuspEnds.CANTOR, False): SurfaceKind.CANTOR_TREE,
    }
    kind = table.get((d.noncusp_ends, d.every_end_infinite_genus))
    if kind is None:
        raise AmbiguousDescriptorError(f"descriptor outside the classification table: {d.to_dict()}")

    surface = SurfaceType(kind, punctured=punctured)
    if not surface.realizable:
        logger.info(f"{surface.name} does not occur for non-atomic invariant random subgroups")
    return surface
