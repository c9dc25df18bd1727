from src.ends.descriptor import NonCuspEnds, CuspEnds, EndsDescriptor, finite_type_descriptor
from src.ends.classifier import (
    SurfaceKind,
    SurfaceType,
    AdmissibilityReport,
    CANONICAL_TYPES,
    canonical_descriptor,
    check_irs_admissible,
    classify,
)
from src.ends.exhaustion import (
    ExhaustionNode,
    ExhaustionTree,
    ExhaustionResult,
    descriptor_from_exhaustion,
    classify_exhaustion,
    linear_tree,
    binary_tree,
)
