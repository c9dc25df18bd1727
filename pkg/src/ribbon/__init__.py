from src.ribbon.ribbon_graph import (
    RibbonGraph,
    SurfaceInvariants,
    sample_configuration,
    faces,
    surface_invariants,
    count_circuits,
    enumerate_all_n1,
)
from src.ribbon.catalog import theta_graph, dumbbell, k33

__all__ = [
    'RibbonGraph',
    'SurfaceInvariants',
    'sample_configuration',
    'faces',
    'surface_invariants',
    'count_circuits',
    'enumerate_all_n1',
    'theta_graph',
    'dumbbell',
    'k33',
]
