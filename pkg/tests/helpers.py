"""Shared test helpers: independent brute-force oracles and seeded generators.

The brute forces here deliberately avoid the library's solver code paths so
expected values are computed through a second route.
"""

from __future__ import annotations

import itertools
import random

from weakiasi import Graph, build_graph


def bowtie() -> Graph:
    """Two triangles sharing vertex 2."""
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def two_squares_sharing_vertex() -> Graph:
    """Two 4-cycles glued at vertex 0 (Eulerian, two even cycles)."""
    return build_graph(7, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5), (5, 6), (0, 6)])


def butterfly_at_one() -> Graph:
    """Two triangles sharing vertex 1; exercises walk-prefix restoration."""
    return build_graph(5, [(0, 1), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)])


def is_independent(g: Graph, vertices) -> bool:
    vs = list(vertices)
    return all(not g.has_edge(u, v) for u, v in itertools.combinations(vs, 2))


def covers_all_edges(g: Graph, vertices) -> bool:
    inside = set(vertices)
    return all(u in inside or v in inside for u, v in g.edges)


def brute_min_mono(g: Graph) -> int:
    """Minimum, over independent subsets, of the edge count avoiding the subset."""
    best = g.m
    for mask in range(1 << g.n):
        ok = True
        for v in range(g.n):
            if mask >> v & 1 and g.adj[v] & mask:
                ok = False
                break
        if not ok:
            continue
        mono = sum(1 for u, v in g.edges if not (mask >> u | mask >> v) & 1)
        if mono < best:
            best = mono
    return best


def brute_max_cut(g: Graph) -> int:
    best = 0
    for mask in range(1 << max(g.n - 1, 0)):
        cut = sum(1 for u, v in g.edges if ((mask >> u) ^ (mask >> v)) & 1)
        if cut > best:
            best = cut
    return best


def brute_matching(g: Graph) -> int:
    edges = g.edges

    def rec(i: int, used: int) -> int:
        if i == len(edges):
            return 0
        u, v = edges[i]
        best = rec(i + 1, used)
        if not (used >> u | used >> v) & 1:
            best = max(best, 1 + rec(i + 1, used | 1 << u | 1 << v))
        return best

    return rec(0, 0)


def brute_is_k_colorable(g: Graph, k: int) -> bool:
    """Plain product enumeration with the first vertex pinned to color 0."""
    if g.n == 0:
        return True
    for rest in itertools.product(range(k), repeat=g.n - 1):
        coloring = (0,) + rest
        if all(coloring[u] != coloring[v] for u, v in g.edges):
            return True
    return False


def brute_alpha(g: Graph) -> int:
    best = 0
    for mask in range(1 << g.n):
        ok = True
        for v in range(g.n):
            if mask >> v & 1 and g.adj[v] & mask:
                ok = False
                break
        if ok:
            best = max(best, mask.bit_count())
    return best


def has_triangle(g: Graph) -> bool:
    return any(
        g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
        for a, b, c in itertools.combinations(range(g.n), 3)
    )


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.35) -> Graph:
    """Random spanning tree plus extra edges with the given probability."""
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra:
                edges.add((u, v))
    return build_graph(n, sorted(edges))


def random_independent_set(rng: random.Random, g: Graph) -> tuple[int, ...]:
    chosen: set[int] = set()
    order = list(range(g.n))
    rng.shuffle(order)
    for v in order:
        if rng.random() < 0.65 and all(not g.has_edge(v, u) for u in chosen):
            chosen.add(v)
    return tuple(sorted(chosen))


def all_connected_graphs(n: int):
    """Every labeled connected graph on exactly n >= 2 vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        if mask.bit_count() < n - 1:
            continue
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                nxt |= adj[low.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= nxt
        if seen != (1 << n) - 1:
            continue
        yield build_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
