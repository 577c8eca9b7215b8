"""Path constructors: spanning paths, near-spanning pairs, bipartite splices."""

import random
from itertools import combinations

import pytest

from cyclestab.errors import (
    HypothesisViolatedError,
    NoSuchPathError,
    ParameterError,
)
from cyclestab.graph import bipartition, build_graph
from cyclestab.paths import (
    bipartite_even_cycle,
    bipartite_path,
    hamiltonian_path_between,
    near_spanning_paths,
)

from conftest import complete, complete_bipartite, cycle_graph, naive_has_path, random_graph


def test_ham_path_k5():
    r = hamiltonian_path_between(complete(5), 0, 3)
    assert r.hypothesis_ok
    assert r.path.order == 5
    assert r.path.endpoints == (0, 3)
    assert r.path.validate(complete(5))


def test_ham_path_c4_flagged():
    r = hamiltonian_path_between(cycle_graph(4), 0, 1)
    assert not r.hypothesis_ok
    assert r.path.vertices == (0, 3, 2, 1)


def test_ham_path_k7_minus_matching():
    edges = [e for e in combinations(range(7), 2) if e not in ((0, 1), (2, 3), (4, 5))]
    g = build_graph(7, edges)
    assert g.min_degree() == 5
    for x in range(7):
        for y in range(x + 1, 7):
            r = hamiltonian_path_between(g, x, y)
            assert r.hypothesis_ok and r.path.order == 7
            assert r.path.validate(g)


def test_ham_path_rejects_equal_endpoints():
    with pytest.raises(ParameterError):
        hamiltonian_path_between(complete(4), 2, 2)


def test_ham_path_no_such_path():
    g = build_graph(4, [(0, 1), (1, 2), (1, 3)])  # star-ish, no spanning 0-2 path
    with pytest.raises(NoSuchPathError) as err:
        hamiltonian_path_between(g, 0, 2)
    assert not err.value.hypothesis_ok


def test_near_spanning_k6():
    r = near_spanning_paths(complete(6), 0, 5)
    assert r.spanning.order == 6
    assert r.almost_spanning.order == 5
    assert r.removed not in r.almost_spanning.vertices
    assert r.removed == 1


def test_near_spanning_k6_minus_edge():
    edges = [e for e in combinations(range(6), 2) if e != (2, 3)]
    g = build_graph(6, edges)
    assert 2 * g.min_degree() >= g.n + 2
    r = near_spanning_paths(g, 0, 1)
    assert r.spanning.validate(g) and r.almost_spanning.validate(g)
    assert r.spanning.order == 6 and r.almost_spanning.order == 5


def test_near_spanning_gate():
    with pytest.raises(HypothesisViolatedError):
        near_spanning_paths(cycle_graph(5), 0, 2)


def test_near_spanning_random_instances():
    rng = random.Random(31)
    done = 0
    while done < 25:
        n = rng.randint(5, 10)
        g = random_graph(rng, n, 0.75 + 0.25 * rng.random())
        if 2 * g.min_degree() < n + 2:
            continue
        done += 1
        for x in range(n):
            for y in range(x + 1, n):
                r = near_spanning_paths(g, x, y)
                assert r.spanning.order == n
                assert r.almost_spanning.order == n - 1
                assert r.spanning.validate(g)
                assert r.almost_spanning.validate(g)
                assert (x, y) == tuple(sorted(r.spanning.endpoints))


def test_bipartite_path_k34_examples():
    g = complete_bipartite(3, 4)
    p = bipartite_path(g, 0, 1, 4)
    assert p.length == 4 and p.endpoints == (0, 1)
    assert p.validate(g)
    p = bipartite_path(g, 0, 3, 3)
    assert p.length == 3 and p.validate(g)


def test_bipartite_path_parity_and_interval():
    g = complete_bipartite(3, 4)
    with pytest.raises(ParameterError, match="parity"):
        bipartite_path(g, 0, 1, 3)
    with pytest.raises(ParameterError, match="interval"):
        bipartite_path(g, 0, 1, 6)  # top is 2(2*3 - 3 - 1) = 4


def test_bipartite_path_not_bipartite():
    with pytest.raises(HypothesisViolatedError):
        bipartite_path(cycle_graph(5), 0, 1, 2)


def test_bipartite_even_cycle_examples():
    c4 = bipartite_even_cycle(complete_bipartite(3, 4), 4)
    assert len(c4) == 4
    c8 = bipartite_even_cycle(complete_bipartite(5, 5), 8)
    assert len(c8) == 8
    g = build_graph(8, [(i, 4 + j) for i in range(4) for j in range(4) if i != j])
    with pytest.raises(ParameterError, match="interval"):
        bipartite_even_cycle(g, 2)


def test_bipartite_splice_growth_is_two_per_step():
    g = complete_bipartite(4, 5)
    # every admissible even length between same-class endpoints appears
    a, b = bipartition(g)
    delta = g.min_degree()
    top = 2 * (2 * delta - a.bit_count() - 1)
    for t in range(2, top + 1, 2):
        p = bipartite_path(g, 0, 1, t)
        assert p.length == t


def _random_bipartite(rng):
    while True:
        na = rng.randint(2, 6)
        nb = rng.randint(na, min(8, 14 - na))
        p = 0.7 + 0.3 * rng.random()
        edges = [(i, na + j) for i in range(na) for j in range(nb)
                 if rng.random() < p]
        g = build_graph(na + nb, edges)
        if bipartition(g) is None:
            continue
        sa, sb = bipartition(g)
        if 2 * g.min_degree() >= sb.bit_count() + 2 and g.edge_count() > 0:
            return g


def test_bipartite_constructor_never_fails_small():
    # scaled-down version of the acceptance property (full run lives there)
    rng = random.Random(32)
    for _ in range(30):
        g = _random_bipartite(rng)
        a, b = bipartition(g)
        delta = g.min_degree()
        top = 2 * (2 * delta - a.bit_count() - 1)
        verts = list(range(g.n))
        for x in verts:
            for y in verts:
                if x == y:
                    continue
                same = bool((a >> x) & 1) == bool((a >> y) & 1)
                base = 2 if same else 3
                for t in range(base, top + 1, 2):
                    w = bipartite_path(g, x, y, t)
                    assert w.validate(g)
                    assert w.length == t
                    assert w.endpoints == (x, y)


def test_bipartite_path_cross_checked_against_enumeration():
    rng = random.Random(33)
    g = _random_bipartite(rng)
    a, b = bipartition(g)
    delta = g.min_degree()
    top = 2 * (2 * delta - a.bit_count() - 1)
    x, y = 0, 1
    same = bool((a >> x) & 1) == bool((a >> y) & 1)
    base = 2 if same else 3
    for t in range(base, top + 1, 2):
        assert naive_has_path(g, x, y, t + 1)
