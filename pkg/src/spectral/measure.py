import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Iterable, List, Sequence, Tuple

import numpy as np
from scipy import sparse

from src.errors import InvalidArgumentError
from src.ribbon.ribbon_graph import RibbonGraph

logger = logging.getLogger('belyi-lab')

# cifre decimali con cui si fondono autovalori numericamente uguali
EIGENVALUE_DECIMALS = 9


@dataclass(frozen=True)
class SpectralMeasure:
    """Finite measure on [0, inf): atoms (value, mass) divided by a volume"""
    atoms: Tuple[Tuple[float, float], ...]
    normalizer: float

    def __post_init__(self):
        if not self.normalizer > 0:
            raise InvalidArgumentError(f"normalizer must be positive, got {self.normalizer}")
        values = [value for value, _ in self.atoms]
        if values != sorted(values):
            raise InvalidArgumentError("atoms must be sorted by value")
        if any(mass <= 0 for _, mass in self.atoms):
            raise InvalidArgumentError("atom masses must be positive")

    @property
    def total_mass(self) -> float:
        return sum(mass for _, mass in self.atoms) / self.normalizer

    def measure(self, a: float, b: float) -> float:
        """Normalized mass of the interval [a, b]"""
        return sum(mass for value, mass in self.atoms if a <= value <= b) / self.normalizer

    def to_rows(self) -> List[dict]:
        return [{"value": value, "mass": mass} for value, mass in self.atoms]


def normalized_spectral_measure(eigs: Iterable[Tuple[float, float]], vol: float) -> SpectralMeasure:
    """Merges equal eigenvalues and attaches the volume normalizer

    Args:
        eigs: pairs (eigenvalue, multiplicity)
        vol: volume of the space
    Returns:
        SpectralMeasure
    """
    if not vol > 0:
        raise InvalidArgumentError(f"vol must be positive, got {vol}")
    merged = defaultdict(float)
    for value, multiplicity in eigs:
        if value < 0:
            raise InvalidArgumentError(f"eigenvalues of a positive operator cannot be negative, got {value}")
        if multiplicity <= 0:
            raise InvalidArgumentError(f"multiplicities must be positive, got {multiplicity}")
        merged[value] += multiplicity
    return SpectralMeasure(atoms=tuple(sorted(merged.items())), normalizer=float(vol))


def heat_trace(mu: SpectralMeasure, t: float) -> float:
    """Normalized heat trace sum(mass * exp(-t * value)) / normalizer"""
    if not t > 0:
        raise InvalidArgumentError(f"t must be positive, got {t}")
    if not mu.atoms:
        return 0.0
    values = np.array([value for value, _ in mu.atoms])
    masses = np.array([mass for _, mass in mu.atoms])
    return float(np.sum(masses * np.exp(-t * values)) / mu.normalizer)


@dataclass
class WeakConvergenceReport:
    t_grid: List[float]
    deviations: List[List[float]]  # una riga per misura, una colonna per t
    tol: float

    @property
    def passed(self) -> bool:
        return bool(self.deviations) and all(dev <= self.tol for dev in self.deviations[-1])

    def to_rows(self) -> List[dict]:
        return [
            {"index": i, "t": t, "deviation": dev}
            for i, row in enumerate(self.deviations)
            for t, dev in zip(self.t_grid, row)
        ]


def weak_convergence_check(seq: Sequence[SpectralMeasure],
                           target_transform: Callable[[float], float],
                           t_grid: Sequence[float],
                           tol: float) -> WeakConvergenceReport:
    """Compares heat transforms of a sequence of measures with a target transform"""
    if not t_grid:
        raise InvalidArgumentError("t_grid must not be empty")
    if not tol > 0:
        raise InvalidArgumentError(f"tol must be positive, got {tol}")
    targets = [target_transform(t) for t in t_grid]
    deviations = [
        [abs(heat_trace(mu, t) - target) for t, target in zip(t_grid, targets)]
        for mu in seq
    ]
    return WeakConvergenceReport(t_grid=list(t_grid), deviations=deviations, tol=tol)


def laplacian_eigenvalues(g: RibbonGraph, degree: int = 3) -> np.ndarray:
    """Eigenvalues of d I - A on the underlying multigraph, in [0, 2d]"""
    adjacency = g.adjacency_matrix().astype(float)
    laplacian = degree * sparse.identity(g.num_vertices, format='csr') - adjacency
    eigenvalues = np.linalg.eigvalsh(laplacian.toarray())
    return np.clip(eigenvalues, 0.0, None)


def graph_spectral_measure(g: RibbonGraph) -> SpectralMeasure:
    """Spectral measure of the graph Laplacian normalized by the vertex count"""
    values, counts = np.unique(np.round(laplacian_eigenvalues(g), EIGENVALUE_DECIMALS), return_counts=True)
    return normalized_spectral_measure(zip(values.tolist(), counts.tolist()), g.num_vertices)
