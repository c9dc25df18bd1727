import random
from fractions import Fraction

import networkx as nx
import pytest

from src.errors import InvalidArgumentError
from src.unimodular.mtp import (
    RootedGraph,
    RootedMeasure,
    TransportFunction,
    mtp_check,
    rooted_measure_from_dict,
    uniformly_rooted,
)
from src.unimodular.transports import TRANSPORTS, get_transport


@pytest.mark.parametrize("name", sorted(TRANSPORTS))
@pytest.mark.parametrize("graph", [nx.path_graph(4), nx.star_graph(3), nx.cycle_graph(5), nx.petersen_graph()],
                         ids=["path", "star", "cycle", "petersen"])
def test_uniform_rooting_is_unimodular(name, graph):
    report = mtp_check(uniformly_rooted(graph), get_transport(name))
    assert report.deficit == 0
    assert report.lhs == report.rhs


def _labelled_random_graph(seed):
    graph = nx.gnp_random_graph(4 + seed % 7, 0.35, seed=seed)
    rng = random.Random(seed)
    for v in graph.nodes:
        graph.nodes[v]['label'] = rng.randint(0, 1)
    return graph


@pytest.mark.parametrize("name", sorted(TRANSPORTS))
@pytest.mark.parametrize("seed", range(25))
def test_uniform_rooting_of_random_graphs(name, seed):
    report = mtp_check(uniformly_rooted(_labelled_random_graph(seed)), get_transport(name))
    assert isinstance(report.deficit, Fraction)
    assert report.deficit == 0


def test_exact_star_masses():
    report = mtp_check(uniformly_rooted(nx.star_graph(3)), get_transport('degree-increase'))
    assert report.lhs == Fraction(3, 4)
    assert report.to_dict()["lhs"] == "3/4"


def test_fixed_root_violates_mass_transport():
    mu = RootedMeasure(support=[(RootedGraph(nx.path_graph(4), 0), Fraction(1))])
    report = mtp_check(mu, get_transport('endpoint-distance-2'))
    assert report.deficit == 1
    assert (report.lhs, report.rhs) == (1, 0)


def test_label_drop_on_labelled_path():
    graph = nx.path_graph(4)
    for v, label in zip(range(4), [1, 0, 1, 0]):
        graph.nodes[v]['label'] = label
    report = mtp_check(uniformly_rooted(graph), get_transport('label-drop'))
    assert report.lhs == Fraction(1, 2)
    assert report.deficit == 0


def test_local_view():
    f = TransportFunction(radius=1, evaluator=lambda g, p, q: 0)
    view = f.local_view(nx.path_graph(6), 0, 5)
    assert set(view.nodes) == {0, 1, 4, 5}


def test_negative_mass_rejected():
    f = TransportFunction(radius=1, evaluator=lambda g, p, q: -1, name="negative")
    with pytest.raises(InvalidArgumentError):
        mtp_check(uniformly_rooted(nx.path_graph(2)), f)


def test_probabilities_must_sum_to_one():
    with pytest.raises(InvalidArgumentError):
        RootedMeasure(support=[(RootedGraph(nx.path_graph(2), 0), Fraction(1, 2))])


def test_root_must_be_a_vertex():
    with pytest.raises(InvalidArgumentError):
        RootedGraph(nx.path_graph(2), 7)


def test_unknown_transport():
    with pytest.raises(InvalidArgumentError):
        get_transport('teleport')


def test_measure_from_json_form():
    data = {
        "support": [
            {"nodes": [0, 1, 2], "edges": [[0, 1], [1, 2]], "root": 0, "prob": "1/3",
             "labels": {"0": 1, "1": 0, "2": 0}},
            {"edges": [[0, 1], [1, 2]], "root": 1, "prob": "2/3"},
        ]
    }
    mu = rooted_measure_from_dict(data)
    assert [prob for _, prob in mu.support] == [Fraction(1, 3), Fraction(2, 3)]
    assert mu.support[0][0].graph.nodes[0]['label'] == 1
    assert rooted_measure_from_dict({"provenance": {}, "data": data}).support[1][0].root == 1


def test_malformed_measure():
    with pytest.raises(InvalidArgumentError):
        rooted_measure_from_dict({"support": [{"root": 0, "prob": 1}]})
