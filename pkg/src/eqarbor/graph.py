"""Simple undirected graphs over dense integer vertices, stored as bitset rows.

Vertices are ``0..n-1``.  Row ``adj[u]`` is a Python int whose bit ``v`` is set
iff ``uv`` is an edge, which makes complements, induced subgraphs and
neighborhood unions single word-parallel integer operations.  A vertex set is
likewise a plain int bitmask; :func:`mask_of` and :func:`vertices_of` convert
back and forth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import FormatError

# Bitset rows cost n**2 / 8 bytes; beyond this the representation is the
# wrong tool and we refuse early instead of thrashing.
MAX_VERTICES = 50_000


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with one bit per listed vertex."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Ascending tuple of the vertices in a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set-bit indices in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: symmetric, loopless bitset adjacency."""

    n: int
    adj: tuple[int, ...]

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return self.adj[u] >> v & 1 == 1

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ordered pairs (u, v) with u < v, lexicographically."""
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1) << (u + 1)
            for v in iter_bits(higher):
                yield (u, v)


@dataclass(frozen=True)
class DegreeStats:
    n: int
    delta_min: int
    delta_max: int


def from_rows(n: int, rows: Iterable[int]) -> Graph:
    """Build a graph from raw adjacency rows, validating the invariants."""
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    if n > MAX_VERTICES:
        raise ValueError(f"order {n} exceeds supported maximum {MAX_VERTICES}")
    adj = tuple(rows)
    if len(adj) != n:
        raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
    full = (1 << n) - 1
    for u, row in enumerate(adj):
        if row & ~full:
            raise ValueError(f"row {u} has bits outside 0..{n - 1}")
        if row >> u & 1:
            raise ValueError(f"loop at vertex {u}")
    for u, row in enumerate(adj):
        for v in iter_bits(row >> (u + 1) << (u + 1)):
            if not adj[v] >> u & 1:
                raise ValueError(f"asymmetric adjacency between {u} and {v}")
    return Graph(n, adj)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on n vertices with the given undirected edges (duplicates collapse)."""
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    if n > MAX_VERTICES:
        raise ValueError(f"order {n} exceeds supported maximum {MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u} rejected")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    """Same vertices, edges exactly the non-edges of g."""
    full = g.vertex_mask
    return Graph(g.n, tuple((row ^ full) & ~(1 << u) for u, row in enumerate(g.adj)))


def degree_stats(g: Graph) -> DegreeStats:
    if g.n == 0:
        raise ValueError("degrees undefined on the empty graph")
    degs = [row.bit_count() for row in g.adj]
    return DegreeStats(g.n, min(degs), max(degs))


def components(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by smallest member."""
    out = []
    seen = 0
    full = g.vertex_mask
    while seen != full:
        start = ((~seen & full) & -(~seen & full)).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        seen |= comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def induces_forest(g: Graph, s: int) -> bool:
    """True iff the subgraph induced by vertex mask s is acyclic.

    Disjoint-set union over the induced edges: an edge whose endpoints are
    already in one set closes a cycle.
    """
    if s & ~g.vertex_mask:
        raise ValueError("subset contains vertices outside the graph")
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:  # path compression
            parent[x], x = root, parent[x]
        return root

    for u in iter_bits(s):
        parent[u] = u
    for u in iter_bits(s):
        for v in iter_bits(g.adj[u] & (s >> (u + 1) << (u + 1))):
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
    return True


def induces_linear_forest(g: Graph, s: int) -> bool:
    """True iff g[s] is a disjoint union of paths (acyclic, induced degrees <= 2)."""
    if s & ~g.vertex_mask:
        raise ValueError("subset contains vertices outside the graph")
    for u in iter_bits(s):
        if (g.adj[u] & s).bit_count() > 2:
            return False
    return induces_forest(g, s)


# ---------------------------------------------------------------------------
# Edge-list document I/O
#
# First significant line `p <n> <m>`, then m lines `e <u> <v>` with 0-based
# endpoints.  Lines starting with `c` are comments; blank lines are ignored.
# ---------------------------------------------------------------------------


def read_graph(text: str) -> Graph:
    n = None
    m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate header")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: header must be 'p <n> <m>'")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer header field") from None
            if n < 1:
                raise FormatError(f"line {lineno}: graph order must be at least 1")
            if m < 0:
                raise FormatError(f"line {lineno}: negative edge count")
        elif parts[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: edge line must be 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer endpoint") from None
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"line {lineno}: endpoint out of range for n={n}")
            if u == v:
                raise FormatError(f"line {lineno}: loop rejected")
            edges.append((u, v))
        else:
            raise FormatError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise FormatError("missing 'p <n> <m>' header")
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges but document has {len(edges)}")
    return from_edge_list(n, edges)


def write_graph(g: Graph) -> str:
    """Canonical document: sorted unique edges, LF separators."""
    lines = [f"p {g.n} {g.edge_count()}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
