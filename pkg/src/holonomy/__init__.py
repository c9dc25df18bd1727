from src.holonomy.turn_word import (
    TurnWord,
    HolonomyMatrix,
    ConjugacyType,
    Classification,
    word_to_matrix,
    classify_matrix,
    length_from_trace,
)
from src.holonomy.geodesics import (
    ClosedGeodesic,
    WalkClasses,
    BrooksBound,
    trace_cutoff,
    walk_length_cutoff,
    enumerate_closed_walk_classes,
    enumerate_geodesics,
    count_NR,
    systole,
    bound_NR_compactified,
    compactified_ratio_bound,
    geodesic_rows,
)
