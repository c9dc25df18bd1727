import logging
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Any, Callable, Dict, List, Tuple, Union

import networkx as nx

from src.errors import InvalidArgumentError

logger = logging.getLogger('belyi-lab')

Number = Union[int, float, Fraction]
Evaluator = Callable[[nx.Graph, Any, Any], Number]

PROBABILITY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class RootedGraph:
    graph: nx.Graph
    root: Any

    def __post_init__(self):
        if self.root not in self.graph:
            raise InvalidArgumentError(f"root {self.root!r} is not a vertex of the graph")


@dataclass
class RootedMeasure:
    """Finitely supported probability measure on rooted finite graphs"""
    support: List[Tuple[RootedGraph, Number]]

    def __post_init__(self):
        if not self.support:
            raise InvalidArgumentError("rooted measure must have nonempty support")
        for _, prob in self.support:
            if not 0 < prob <= 1:
                raise InvalidArgumentError(f"probabilities must lie in (0, 1], got {prob}")
        total = sum(prob for _, prob in self.support)
        if abs(total - 1) > PROBABILITY_TOLERANCE:
            raise InvalidArgumentError(f"probabilities must sum to 1, got {total}")


@dataclass(frozen=True)
class TransportFunction:
    """Mass f(G, p, q) sent from p to q; evaluated on the union of the radius-balls of p and q"""
    radius: int
    evaluator: Evaluator
    name: str = "custom"

    def __post_init__(self):
        if self.radius < 1:
            raise InvalidArgumentError(f"transport radius must be positive, got {self.radius}")

    def local_view(self, graph: nx.Graph, p: Any, q: Any) -> nx.Graph:
        ball = set(nx.single_source_shortest_path_length(graph, p, cutoff=self.radius))
        ball |= set(nx.single_source_shortest_path_length(graph, q, cutoff=self.radius))
        return graph.subgraph(ball)

    def __call__(self, graph: nx.Graph, p: Any, q: Any) -> Number:
        value = self.evaluator(self.local_view(graph, p, q), p, q)
        if value < 0:
            raise InvalidArgumentError(f"transport function {self.name} returned a negative mass {value}")
        return value


@dataclass(frozen=True)
class MTPReport:
    lhs: Number
    rhs: Number
    deficit: Number

    def to_dict(self) -> Dict[str, Any]:
        def _encode(x):
            return str(x) if isinstance(x, Fraction) else x
        return {"lhs": _encode(self.lhs), "rhs": _encode(self.rhs), "deficit": _encode(self.deficit),
                "lhs_float": float(self.lhs), "rhs_float": float(self.rhs), "deficit_float": float(self.deficit)}


def mtp_check(mu: RootedMeasure, f: TransportFunction) -> MTPReport:
    """Mass sent out of the root against mass received by it, averaged over mu.

    Sums are exact when the probabilities and the values of f are integers or Fractions.
    """
    lhs: Number = Fraction(0)
    rhs: Number = Fraction(0)
    for rooted, prob in mu.support:
        graph, root = rooted.graph, rooted.root
        out_mass = sum((f(graph, root, q) for q in graph.nodes), Fraction(0))
        in_mass = sum((f(graph, p, root) for p in graph.nodes), Fraction(0))
        lhs += prob * out_mass
        rhs += prob * in_mass
    return MTPReport(lhs=lhs, rhs=rhs, deficit=abs(lhs - rhs))


def uniformly_rooted(graph: nx.Graph) -> RootedMeasure:
    """The graph rooted at a uniformly random vertex, with exact probabilities"""
    if graph.number_of_nodes() == 0:
        raise InvalidArgumentError("cannot root an empty graph")
    prob = Fraction(1, graph.number_of_nodes())
    return RootedMeasure(support=[(RootedGraph(graph, v), prob) for v in sorted(graph.nodes)])


def _parse_probability(value: Any) -> Number:
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, Real):
        return value
    raise InvalidArgumentError(f"invalid probability {value!r}")


def rooted_measure_from_dict(data: Dict[str, Any]) -> RootedMeasure:
    """Reads {"support": [{"nodes": [...], "edges": [[u, v], ...], "root": r, "prob": "1/2"}, ...]}"""
    if 'data' in data and 'support' not in data:
        data = data['data']
    try:
        support = []
        for item in data['support']:
            graph = nx.Graph()
            graph.add_nodes_from(item.get('nodes', []))
            graph.add_edges_from(tuple(edge) for edge in item['edges'])
            for node, label in (item.get('labels') or {}).items():
                graph.nodes[_node_key(graph, node)]['label'] = label
            support.append((RootedGraph(graph, item['root']), _parse_probability(item['prob'])))
    except (KeyError, TypeError) as e:
        raise InvalidArgumentError(f"Malformed rooted measure: {e}")
    return RootedMeasure(support=support)


def _node_key(graph: nx.Graph, key: str) -> Any:
    # le chiavi JSON sono stringhe, i nodi possono essere interi
    if key in graph:
        return key
    try:
        return int(key)
    except ValueError:
        raise InvalidArgumentError(f"label given for unknown vertex {key!r}")
