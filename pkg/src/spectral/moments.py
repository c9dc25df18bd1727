import math
import logging
from dataclasses import dataclass
from typing import List

import numpy as np
from scipy.integrate import quad

from src.config.models.budget import DEFAULT_MAX_WALKS
from src.errors import BudgetExceededError, InvalidArgumentError
from src.ribbon.ribbon_graph import RibbonGraph

logger = logging.getLogger('belyi-lab')

INT64_MAX = int(np.iinfo(np.int64).max)


@dataclass(frozen=True)
class MomentSequence:
    """Closed-walk counts m_0..m_k and the vertex count they are normalized by"""
    moments: tuple
    normalizer: int

    def per_vertex(self) -> List[float]:
        return [m / self.normalizer for m in self.moments]


def adjacency_moment_sequence(g: RibbonGraph, k_max: int, max_walks: int = DEFAULT_MAX_WALKS) -> MomentSequence:
    """Exact number of closed walks of each length 0..k_max in the underlying multigraph.

    Computed as traces of A^k by repeated sparse-dense products, in int64 while
    vertices * degree^k fits and in Python integers after that; the budget caps
    the number of matrix-vector products (vertices times k_max).
    """
    if k_max < 1:
        raise InvalidArgumentError(f"k_max must be positive, got {k_max}")
    work = g.num_vertices * k_max
    if work > max_walks:
        raise BudgetExceededError(max_walks, work, "moment computation")
    adjacency = g.adjacency_matrix().tocsr()
    degree = int(adjacency.sum(axis=1).max())
    power = np.identity(g.num_vertices, dtype=np.int64)
    moments = [int(np.trace(power))]
    for k in range(1, k_max + 1):
        # le righe di A^k sommano a degree^k: oltre INT64_MAX si passa agli interi Python
        if power.dtype != object and g.num_vertices * degree ** k > INT64_MAX:
            power = power.astype(object)
        if power.dtype == object:
            power = _sparse_times(adjacency, power)
        else:
            power = np.asarray(adjacency @ power, dtype=np.int64)
        moments.append(int(np.trace(power)))
    return MomentSequence(moments=tuple(moments), normalizer=g.num_vertices)


def _sparse_times(adjacency, power: np.ndarray) -> np.ndarray:
    """A @ power for an object (Python int) power, row by row over the CSR structure"""
    result = np.zeros(power.shape, dtype=object)
    for i in range(adjacency.shape[0]):
        for ptr in range(adjacency.indptr[i], adjacency.indptr[i + 1]):
            result[i] = result[i] + int(adjacency.data[ptr]) * power[adjacency.indices[ptr]]
    return result


def tree_moment_sequence(d: int, k_max: int) -> MomentSequence:
    """Closed walks from the root of the infinite d-regular tree, by DP on the distance"""
    if d < 3:
        raise InvalidArgumentError(f"d must be at least 3, got {d}")
    if k_max < 1:
        raise InvalidArgumentError(f"k_max must be positive, got {k_max}")
    depth = k_max // 2 + 1
    # ways[j] = cammini che terminano a distanza j dalla radice
    ways = [1] + [0] * depth
    moments = [1]
    for _ in range(k_max):
        nxt = [0] * (depth + 1)
        for j, count in enumerate(ways):
            if count == 0:
                continue
            if j == 0:
                nxt[1] += d * count
                continue
            nxt[j - 1] += count
            if j < depth:
                nxt[j + 1] += (d - 1) * count
        ways = nxt
        moments.append(ways[0])
    return MomentSequence(moments=tuple(moments), normalizer=1)


def kesten_mckay_density(x: float, d: int = 3) -> float:
    """Density of the spectral measure of the d-regular tree at adjacency eigenvalue x"""
    edge = 4 * (d - 1)
    if x * x >= edge:
        return 0.0
    return d * math.sqrt(edge - x * x) / (2 * math.pi * (d * d - x * x))


def tree_heat_trace(t: float, d: int = 3) -> float:
    """Heat transform of the tree Laplacian d - x under the Kesten-McKay law"""
    if not t > 0:
        raise InvalidArgumentError(f"t must be positive, got {t}")
    edge = 2 * math.sqrt(d - 1)
    value, _ = quad(lambda x: math.exp(-t * (d - x)) * kesten_mckay_density(x, d), -edge, edge,
                    epsabs=1e-12, limit=200)
    return value


def moment_deviation(graph_moments: MomentSequence, tree_moments: MomentSequence) -> List[float]:
    """|m_k(G)/|V| - m_k(tree)| for each k present in both sequences"""
    return [abs(a - b) for a, b in zip(graph_moments.per_vertex(), tree_moments.per_vertex())]
