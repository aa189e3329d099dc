import random
from fractions import Fraction

import pytest

from nilpotent_dga.multiindex import enumerate_EN
from nilpotent_dga.paths import (GRAPH_L, WeightedDigraph, c_oracle, enumerate_paths, graph_L_neighbors,
                                 kernel, kernel_row, reachable)

from _support import brute_path_sum, rq


def random_graph(rng, n_vertices=5, n_edges=10):
    verts = [f"v{i}" for i in range(n_vertices)]
    edges = [(rng.choice(verts), rng.choice(verts), rq(rng)) for _ in range(n_edges)]
    return verts, WeightedDigraph.from_edges(edges)


def test_graph_L_edges():
    assert graph_L_neighbors(()) == [((0,), 1), ((), 1)]
    nb = dict(graph_L_neighbors((1, 0)))
    assert nb[(0, 1, 0)] == 1
    assert nb[(1, 0)] == -1
    assert nb[(2, 0)] == 1
    assert nb[(1, 1)] == 1
    nb = dict(graph_L_neighbors((0,)))
    assert nb[(0,)] == -1 and nb[(1,)] == 1


def test_kernel_examples():
    assert kernel(GRAPH_L, 2, (), (0,)) == 0
    assert kernel(GRAPH_L, 0, (3, 1), (3, 1)) == 1
    G = WeightedDigraph.from_edges([("u", "v", Fraction(-3, 2))])
    assert kernel(G, 1, "u", "v") == Fraction(-3, 2)
    assert kernel(G, 2, "u", "v") == 0
    with pytest.raises(ValueError):
        kernel_row(G, -1, "u")


def test_dp_matches_path_enumeration():
    rng = random.Random(4)
    for _ in range(10):
        verts, G = random_graph(rng)
        for n in range(5):
            for x in verts:
                for y in verts:
                    paths = enumerate_paths(G, n, x, y)
                    total = sum((w for _, w in paths), Fraction(0))
                    assert kernel(G, n, x, y) == total == brute_path_sum(G.neighbors, n, x, y)


def test_chapman_kolmogorov():
    rng = random.Random(5)
    for _ in range(10):
        verts, G = random_graph(rng)
        for m in range(4):
            for n in range(4):
                for x in verts:
                    rx = kernel_row(G, m, x)
                    for y in verts:
                        split = sum((c * kernel(G, n, z, y) for z, c in rx.items()), Fraction(0))
                        assert kernel(G, m + n, x, y) == split


def test_L_oracle_by_brute_force():
    for N in range(6):
        for s in enumerate_EN(N):
            assert c_oracle(s, N) == brute_path_sum(graph_L_neighbors, N, (), s)


def test_L_paths_stay_in_EN():
    for N in range(7):
        assert reachable(GRAPH_L, N, ()) <= set(enumerate_EN(N))


def test_unknown_vertex_has_no_paths():
    G = WeightedDigraph.from_edges([("a", "b", Fraction(1))])
    assert not G.has_vertex("z")
    assert kernel(G, 0, "a", "a") == 1
