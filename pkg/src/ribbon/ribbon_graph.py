import json
import math
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Dict, List, Sequence, Tuple, Any

import networkx as nx
import numpy as np
from scipy import sparse

from src.config.models.budget import DEFAULT_MAX_WALKS
from src.errors import BudgetExceededError, InternalError, InvalidArgumentError

logger = logging.getLogger('belyi-lab')

SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class RibbonGraph:
    """Trivalent ribbon graph on 2n vertices encoded by two permutations of the 6n darts.

    sigma is the vertex rotation (all cycles of length 3), alpha the edge pairing
    (fixed-point-free involution). Loops and parallel edges are allowed.
    """
    n: int
    sigma: Tuple[int, ...]
    alpha: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'sigma', tuple(int(d) for d in self.sigma))
        object.__setattr__(self, 'alpha', tuple(int(d) for d in self.alpha))
        self._validate()

    def _validate(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidArgumentError(f"n must be a positive integer, got {self.n!r}")
        size = 6 * self.n
        darts = set(range(size))
        if len(self.sigma) != size or set(self.sigma) != darts:
            raise InvalidArgumentError(f"sigma must be a permutation of 0..{size - 1}")
        if len(self.alpha) != size or set(self.alpha) != darts:
            raise InvalidArgumentError(f"alpha must be a permutation of 0..{size - 1}")
        for d in range(size):
            if self.alpha[d] == d or self.alpha[self.alpha[d]] != d:
                raise InvalidArgumentError(f"alpha is not a fixed-point-free involution at dart {d}")
            if self.sigma[d] == d or self.sigma[self.sigma[self.sigma[d]]] != d:
                raise InvalidArgumentError(f"sigma cycle through dart {d} does not have length 3")

    @property
    def num_darts(self) -> int:
        return 6 * self.n

    @property
    def num_vertices(self) -> int:
        return 2 * self.n

    @property
    def num_edges(self) -> int:
        return 3 * self.n

    @cached_property
    def sigma_inverse(self) -> Tuple[int, ...]:
        inverse = [0] * self.num_darts
        for d, image in enumerate(self.sigma):
            inverse[image] = d
        return tuple(inverse)

    @cached_property
    def _vertex_index(self) -> Tuple[int, ...]:
        # vertici numerati nell'ordine del loro dart minimo
        index = [-1] * self.num_darts
        count = 0
        for d in range(self.num_darts):
            if index[d] == -1:
                e = d
                while index[e] == -1:
                    index[e] = count
                    e = self.sigma[e]
                count += 1
        return tuple(index)

    def vertex_of(self, dart: int) -> int:
        return self._vertex_index[dart]

    def edge_of(self, dart: int) -> int:
        """Edge id = smaller dart of the alpha-orbit"""
        return min(dart, self.alpha[dart])

    def vertices(self) -> List[Tuple[int, int, int]]:
        """Sigma cycles, each starting at its smallest dart"""
        seen = set()
        cycles = []
        for d in range(self.num_darts):
            if d not in seen:
                cycle = (d, self.sigma[d], self.sigma[self.sigma[d]])
                seen.update(cycle)
                cycles.append(cycle)
        return cycles

    def edges(self) -> List[Tuple[int, int]]:
        return [(d, self.alpha[d]) for d in range(self.num_darts) if d < self.alpha[d]]

    def relabel(self, perm: Sequence[int]) -> 'RibbonGraph':
        """Conjugate both permutations by the dart relabeling d -> perm[d]"""
        if sorted(perm) != list(range(self.num_darts)):
            raise InvalidArgumentError("relabeling must be a permutation of the darts")
        sigma = [0] * self.num_darts
        alpha = [0] * self.num_darts
        for d in range(self.num_darts):
            sigma[perm[d]] = perm[self.sigma[d]]
            alpha[perm[d]] = perm[self.alpha[d]]
        return RibbonGraph(n=self.n, sigma=tuple(sigma), alpha=tuple(alpha))

    def to_multigraph(self) -> nx.MultiGraph:
        """Underlying multigraph (loops and parallel edges kept)"""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.num_vertices))
        for a, b in self.edges():
            graph.add_edge(self.vertex_of(a), self.vertex_of(b), key=a)
        return graph

    def adjacency_matrix(self) -> sparse.csr_matrix:
        """Integer adjacency matrix; a loop contributes 2 to its diagonal entry"""
        rows = np.fromiter((self.vertex_of(d) for d in range(self.num_darts)), dtype=np.int64)
        cols = np.fromiter((self.vertex_of(self.alpha[d]) for d in range(self.num_darts)), dtype=np.int64)
        data = np.ones(self.num_darts, dtype=np.int64)
        shape = (self.num_vertices, self.num_vertices)
        return sparse.coo_matrix((data, (rows, cols)), shape=shape).tocsr()

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "sigma": list(self.sigma), "alpha": list(self.alpha)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RibbonGraph':
        """Accepts the bare object or the {provenance, data} envelope"""
        if 'data' in data and 'n' not in data:
            data = data['data']
        try:
            return cls(n=data['n'], sigma=tuple(data['sigma']), alpha=tuple(data['alpha']))
        except KeyError as e:
            raise InvalidArgumentError(f"Missing field in ribbon graph JSON: {e}")

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> 'RibbonGraph':
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class SurfaceInvariants:
    """Topology of the punctured surface S and of its compactification S_C.

    Volumes are stored exactly in units of pi.
    """
    n: int
    vertices: int
    edges: int
    faces: int
    genus: int
    cusps: int
    vol_S_units: int
    vol_SC_units: int

    @property
    def vol_S(self) -> float:
        return self.vol_S_units * math.pi

    @property
    def vol_SC(self) -> float:
        return self.vol_SC_units * math.pi

    @property
    def euler_characteristic(self) -> int:
        return self.vertices - self.edges + self.faces

    @property
    def hyperbolic_compactification(self) -> bool:
        return 2 * self.genus - 2 > 0

    def identities_hold(self) -> bool:
        """Euler, cusp-count and Gauss-Bonnet identities in exact integer arithmetic"""
        return (2 - 2 * self.genus == -self.n + self.faces
                and self.cusps == self.faces
                and 2 * self.genus - 2 + self.cusps == self.n
                and self.vol_S_units == self.vol_SC_units + 2 * self.cusps)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "vertices": self.vertices,
            "edges": self.edges,
            "faces": self.faces,
            "genus": self.genus,
            "cusps": self.cusps,
            "vol_S": self.vol_S,
            "vol_SC": self.vol_SC,
            "vol_S_over_pi": self.vol_S_units,
            "vol_SC_over_pi": self.vol_SC_units,
            "hyperbolic_compactification": self.hyperbolic_compactification,
        }


def sample_configuration(n: int, seed: int) -> RibbonGraph:
    """Sample a ribbon graph from the configuration model.

    A uniform bijection {0..6n-1} -> {0..2n-1} x {0,1,2} is drawn and consecutive
    positions are paired into edges; each vertex gets one of its two cyclic orders
    uniformly and independently.

    Args:
        n: surface complexity (2n vertices, 3n edges)
        seed: 64-bit seed; equal (n, seed) give equal graphs
    Returns:
        RibbonGraph
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidArgumentError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    rng = np.random.default_rng(int(seed) & SEED_MASK)
    size = 6 * n

    # posizione i -> slot (vertice, lato) codificato come 3*vertice + lato
    slots = rng.permutation(size)
    alpha = np.empty(size, dtype=np.int64)
    alpha[slots[0::2]] = slots[1::2]
    alpha[slots[1::2]] = slots[0::2]

    flips = rng.integers(0, 2, size=2 * n)
    base = np.arange(size, dtype=np.int64).reshape(2 * n, 3)
    forward = base[:, [1, 2, 0]]
    backward = base[:, [2, 0, 1]]
    sigma = np.where(flips[:, None] == 0, forward, backward).ravel()

    return RibbonGraph(n=n, sigma=tuple(sigma.tolist()), alpha=tuple(alpha.tolist()))


def faces(g: RibbonGraph) -> List[Tuple[int, ...]]:
    """Orbits of sigma o alpha, each listed from its smallest dart, sorted by that dart"""
    visited = [False] * g.num_darts
    result = []
    for start in range(g.num_darts):
        if visited[start]:
            continue
        cycle = []
        d = start
        while not visited[d]:
            visited[d] = True
            cycle.append(d)
            d = g.sigma[g.alpha[d]]
        result.append(tuple(cycle))
    return result


def surface_invariants(g: RibbonGraph) -> SurfaceInvariants:
    """Genus, cusps and volumes of the surface glued from 2n ideal triangles"""
    num_faces = len(faces(g))
    twice_genus = 2 + g.n - num_faces
    if twice_genus % 2 != 0 or twice_genus < 0:
        raise InternalError(f"Euler characteristic parity broken: 2 + n - F = {twice_genus}")
    genus = twice_genus // 2
    return SurfaceInvariants(
        n=g.n,
        vertices=g.num_vertices,
        edges=g.num_edges,
        faces=num_faces,
        genus=genus,
        cusps=num_faces,
        vol_S_units=2 * g.n,
        vol_SC_units=2 * g.n - 2 * num_faces,
    )


def count_circuits(g: RibbonGraph, k_max: int, max_walks: int = DEFAULT_MAX_WALKS) -> Dict[int, int]:
    """Number of circuits (cycles of the multigraph) of each length 1..k_max.

    A loop is a circuit of length 1 and a pair of parallel edges one of length 2.
    Each circuit is found once per direction, starting from its smallest dart.

    Raises:
        InvalidArgumentError: k_max < 1
        BudgetExceededError: more than max_walks partial walks visited
    """
    if k_max < 1:
        raise InvalidArgumentError(f"k_max must be positive, got {k_max}")
    sigma, sigma_inv, alpha = g.sigma, g.sigma_inverse, g.alpha
    walks = {k: 0 for k in range(1, k_max + 1)}
    visited_nodes = 0

    for d0 in range(g.num_darts):
        start_vertex = g.vertex_of(d0)
        # stack di (dart uscente corrente, lunghezza, archi usati)
        stack = [(d0, 1, frozenset((g.edge_of(d0),)))]
        while stack:
            d, length, used = stack.pop()
            visited_nodes += 1
            if visited_nodes > max_walks:
                raise BudgetExceededError(max_walks, visited_nodes, "circuit enumeration")
            x = alpha[d]
            if g.vertex_of(x) == start_vertex and x != d0:
                walks[length] += 1
                continue
            if length == k_max:
                continue
            for y in (sigma[x], sigma_inv[x]):
                if y > d0 and g.edge_of(y) not in used:
                    stack.append((y, length + 1, used | {g.edge_of(y)}))

    return {k: walks[k] // 2 for k in walks}


def enumerate_all_n1() -> List[RibbonGraph]:
    """All 15 perfect matchings of 6 darts times the 4 rotation choices (n = 1)"""
    graphs = []
    for matching in _perfect_matchings(list(range(6))):
        alpha = [0] * 6
        for a, b in matching:
            alpha[a], alpha[b] = b, a
        for flips in product((0, 1), repeat=2):
            sigma = []
            for v, flip in enumerate(flips):
                base = 3 * v
                sigma.extend([base + 1, base + 2, base] if flip == 0 else [base + 2, base, base + 1])
            graphs.append(RibbonGraph(n=1, sigma=tuple(sigma), alpha=tuple(alpha)))
    return graphs


def _perfect_matchings(items: List[int]) -> List[List[Tuple[int, int]]]:
    if not items:
        return [[]]
    first, rest = items[0], items[1:]
    matchings = []
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for sub in _perfect_matchings(remaining):
            matchings.append([(first, partner)] + sub)
    return matchings
