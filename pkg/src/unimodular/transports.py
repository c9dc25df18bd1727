import networkx as nx

from src.errors import InvalidArgumentError
from src.unimodular.mtp import TransportFunction


def _neighbor(graph: nx.Graph, p, q) -> int:
    return int(graph.has_edge(p, q))


def _degree_increase(graph: nx.Graph, p, q) -> int:
    return int(graph.has_edge(p, q) and graph.degree(q) > graph.degree(p))


def _endpoint_distance_2(graph: nx.Graph, p, q) -> int:
    if graph.degree(p) != 1:
        return 0
    try:
        return int(nx.shortest_path_length(graph, p, q) == 2)
    except nx.NetworkXNoPath:
        return 0


def _label_drop(graph: nx.Graph, p, q) -> int:
    """Unit mass from a 1 to the 0 right after it on an integer-indexed labelled path"""
    return int(q == p + 1 and graph.has_edge(p, q)
               and graph.nodes[p].get('label') == 1 and graph.nodes[q].get('label') == 0)


# radius: raggio di localita' di ciascuna funzione
TRANSPORTS = {
    'neighbor': TransportFunction(radius=1, evaluator=_neighbor, name='neighbor'),
    'degree-increase': TransportFunction(radius=2, evaluator=_degree_increase, name='degree-increase'),
    'endpoint-distance-2': TransportFunction(radius=2, evaluator=_endpoint_distance_2, name='endpoint-distance-2'),
    'label-drop': TransportFunction(radius=1, evaluator=_label_drop, name='label-drop'),
}


def get_transport(name: str) -> TransportFunction:
    try:
        return TRANSPORTS[name]
    except KeyError:
        raise InvalidArgumentError(f"Unknown transport function '{name}'. Available: {', '.join(sorted(TRANSPORTS))}")
