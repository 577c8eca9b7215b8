"""graph6 and edge-list parsing, serialization, and auto-detection."""

import random

import networkx as nx
import pytest

from cyclestab.errors import GraphFormatError
from cyclestab.formats import (
    from_edge_list,
    from_graph6,
    parse_graph,
    serialize_graph,
    to_edge_list,
    to_graph6,
)
from cyclestab.graph import build_graph

from conftest import complete, petersen, random_graph


def _nx_graph6(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return nx.to_graph6_bytes(G, header=False).decode().strip()


def test_graph6_matches_networkx_on_k5():
    assert to_graph6(complete(5)) == _nx_graph6(complete(5))


def test_graph6_matches_networkx_random():
    rng = random.Random(11)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 20), rng.random())
        assert to_graph6(g) == _nx_graph6(g)


def test_graph6_round_trip_byte_identical():
    rng = random.Random(12)
    for _ in range(60):
        g = random_graph(rng, rng.randint(0, 30), rng.random())
        line = to_graph6(g)
        assert from_graph6(line) == g
        assert to_graph6(from_graph6(line)) == line


def test_graph6_long_form_orders():
    for n in (63, 64):
        g = build_graph(n, [(0, 1), (n - 2, n - 1)])
        assert from_graph6(to_graph6(g)) == g


def test_graph6_header_accepted():
    g = petersen()
    assert from_graph6(">>graph6<<" + to_graph6(g)) == g


def test_graph6_rejects_oversize():
    G = nx.empty_graph(65)
    line = nx.to_graph6_bytes(G, header=False).decode().strip()
    with pytest.raises(GraphFormatError):
        from_graph6(line)


def test_graph6_rejects_truncated():
    with pytest.raises(GraphFormatError):
        from_graph6(to_graph6(petersen())[:-1])


def test_edge_list_round_trip():
    g = petersen()
    assert from_edge_list(to_edge_list(g)) == g


def test_edge_list_k3():
    assert from_edge_list("3 3\n0 1\n1 2\n2 0") == complete(3)


def test_edge_list_out_of_range():
    with pytest.raises(GraphFormatError):
        from_edge_list("2 1\n0 2")


@pytest.mark.parametrize("text", ["", "3\n0 1", "3 2\n0 1", "3 1\n0 1\n1 2", "x y"])
def test_edge_list_malformed(text):
    with pytest.raises(GraphFormatError):
        from_edge_list(text)


def test_parse_auto_detect():
    g = petersen()
    assert parse_graph(to_graph6(g)) == g
    assert parse_graph(to_edge_list(g)) == g


def test_serialize_graph_formats():
    g = complete(4)
    assert parse_graph(serialize_graph(g, "graph6")) == g
    assert parse_graph(serialize_graph(g, "edges")) == g
