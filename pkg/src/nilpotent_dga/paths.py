"""Discrete path sums on weighted directed graphs.

The kernel omega_n(x, y) is the sum over length-n paths from x to y of the
product of edge weights.  Graphs are given by a neighbour function so that
infinite graphs such as the multi-index graph L are explored lazily.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable

from .multiindex import (MultiIndex, bump, order_key, prepend_zero, s_lt,
                         size, weight)

Vertex = Hashable


class WeightedDigraph:
    def __init__(self, neighbors: Callable[[Vertex], Iterable[tuple[Vertex, Fraction]]],
                 vertices: Iterable[Vertex] | None = None, sort_key=None):
        self._neighbors = neighbors
        self.vertices = None if vertices is None else list(vertices)
        self.sort_key = sort_key

    def neighbors(self, v: Vertex) -> list[tuple[Vertex, Fraction]]:
        return list(self._neighbors(v))

    def has_vertex(self, v: Vertex) -> bool:
        return self.vertices is None or v in self.vertices

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[Vertex, Vertex, Fraction]]) -> "WeightedDigraph":
        """Finite graph; parallel edges are kept as separate edges."""
        adj: dict = {}
        verts: list = []
        for src, tgt, w in edges:
            for v in (src, tgt):
                if v not in adj:
                    adj[v] = []
                    verts.append(v)
            adj[src].append((tgt, Fraction(w)))
        return cls(lambda v: adj.get(v, []), verts, sort_key=str)


def graph_L_neighbors(s) -> list[tuple[MultiIndex, Fraction]]:
    """Out-edges of s in L: prepend a zero (weight 1), stay (weight
    (-1)^{|s|+l(s)}), or raise entry i (weight (-1)^{|s_<i| + i - 1})."""
    s = tuple(s)
    out = [(prepend_zero(s), Fraction(1)),
           (s, Fraction(-1 if weight(s) % 2 else 1))]
    for i in range(1, len(s) + 1):
        out.append((bump(s, i), Fraction(-1 if (size(s_lt(s, i)) + i - 1) % 2 else 1)))
    return out


GRAPH_L = WeightedDigraph(graph_L_neighbors, sort_key=order_key)


def propagate(G: WeightedDigraph, state: dict) -> dict:
    """One step: new[y] = sum_x state[x] * weight(x -> y)."""
    out: dict = {}
    for x, c in state.items():
        for y, w in G.neighbors(x):
            out[y] = out.get(y, 0) + c * w
    return {y: c for y, c in out.items() if c != 0}


def kernel_row(G: WeightedDigraph, n: int, x: Vertex) -> dict:
    """omega_n(x, y) for every y, as a dict; zero values are dropped."""
    if n < 0:
        raise ValueError("path length must be >= 0")
    state = {x: Fraction(1)}
    for _ in range(n):
        state = propagate(G, state)
    return state


def kernel(G: WeightedDigraph, n: int, x: Vertex, y: Vertex) -> Fraction:
    return kernel_row(G, n, x).get(y, Fraction(0))


def reachable(G: WeightedDigraph, n: int, x: Vertex) -> set:
    """Vertices at the end of some path of length exactly n from x."""
    layer = {x}
    for _ in range(n):
        layer = {y for v in layer for y, _ in G.neighbors(v)}
    return layer


def enumerate_paths(G: WeightedDigraph, n: int, x: Vertex, y: Vertex) -> list[tuple[tuple, Fraction]]:
    """All length-n paths x -> y as (vertex sequence, weight), depth first."""
    found = []

    def walk(path, w):
        if len(path) == n + 1:
            if path[-1] == y:
                found.append((tuple(path), w))
            return
        for v, ew in G.neighbors(path[-1]):
            path.append(v)
            walk(path, w * ew)
            path.pop()

    walk([x], Fraction(1))
    return found


def c_oracle(s, N: int) -> Fraction:
    """Path-sum value of c(s, N): omega_N(empty, s) on the graph L."""
    return _L_row(int(N)).get(tuple(s), Fraction(0))


_L_ROWS: dict[int, dict] = {}


def _L_row(N: int) -> dict:
    if N not in _L_ROWS:
        _L_ROWS[N] = kernel_row(GRAPH_L, N, ())
    return _L_ROWS[N]
