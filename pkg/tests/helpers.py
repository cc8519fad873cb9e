"""Shared graph builders and independent reference oracles for the tests.

The oracles here deliberately use different algorithms and data structures
than the package (edge recursion instead of blossom, BFS counting instead of
union-find) so agreement is meaningful.
"""

from __future__ import annotations

import itertools
import random

from eqarbor import Graph, from_edge_list
from eqarbor.oracle import graph_from_mask, pair_count

# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------


def complete(n: int) -> Graph:
    return from_edge_list(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Star on n vertices, center 0."""
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def empty(n: int) -> Graph:
    return from_edge_list(n, [])


def circulant(n: int, jumps: tuple[int, ...]) -> Graph:
    edges = [(i, (i + d) % n) for i in range(n) for d in jumps]
    return from_edge_list(n, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(u, v) for u in range(a) for v in range(a, a + b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    n = sum(g.n for g in graphs)
    edges = []
    off = 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges())
        off += g.n
    return from_edge_list(n, edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


def all_graphs(n: int):
    """Every labeled graph of order n."""
    for mask in range(1 << pair_count(n)):
        yield graph_from_mask(n, mask)


# ---------------------------------------------------------------------------
# Independent oracles
# ---------------------------------------------------------------------------


def oracle_components(g: Graph) -> list[set[int]]:
    """DFS components over an explicit neighbor list representation."""
    neighbors = {u: [v for v in range(g.n) if g.has_edge(u, v)] for u in range(g.n)}
    seen: set[int] = set()
    out = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for v in neighbors[u]:
                if v not in comp:
                    comp.add(v)
                    stack.append(v)
        seen |= comp
        out.append(comp)
    return out


def oracle_is_forest(g: Graph, subset: set[int]) -> bool:
    """Edge-count criterion: acyclic iff |E| = |V| - #components on every part."""
    edges = [(u, v) for u, v in g.edges() if u in subset and v in subset]
    # components of the induced subgraph by repeated BFS over the edge list
    adj = {v: set() for v in subset}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen: set[int] = set()
    comps = 0
    for s in subset:
        if s in seen:
            continue
        comps += 1
        frontier = {s}
        while frontier:
            seen |= frontier
            frontier = {w for f in frontier for w in adj[f]} - seen
    return len(edges) == len(subset) - comps


def oracle_matching_size(g: Graph) -> int:
    """Maximum matching by recursion over the edge list (include/exclude)."""
    edges = list(g.edges())

    def rec(idx: int, used: int) -> int:
        best = 0
        for i in range(idx, len(edges)):
            u, v = edges[i]
            if used >> u & 1 or used >> v & 1:
                continue
            got = 1 + rec(i + 1, used | 1 << u | 1 << v)
            if got > best:
                best = got
        return best

    return rec(0, 0)


def oracle_girth(g: Graph) -> int | None:
    """Length of a shortest cycle via BFS from every vertex, None if acyclic."""
    best = None
    for src in range(g.n):
        dist = {src: 0}
        parent = {src: -1}
        frontier = [src]
        while frontier:
            nxt = []
            for u in frontier:
                for v in range(g.n):
                    if not g.has_edge(u, v):
                        continue
                    if v not in dist:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        nxt.append(v)
                    elif parent[u] != v:
                        cand = dist[u] + dist[v] + 1
                        if best is None or cand < best:
                            best = cand
            frontier = nxt
    return best


def oracle_longest_path_edges(g: Graph) -> int:
    """Exhaustive DFS longest path (edge count); only for small graphs."""
    best = 0

    def dfs(u: int, used: int, length: int) -> None:
        nonlocal best
        if length > best:
            best = length
        for v in range(g.n):
            if g.has_edge(u, v) and not used >> v & 1:
                dfs(v, used | 1 << v, length + 1)

    for s in range(g.n):
        dfs(s, 1 << s, 0)
    return best
