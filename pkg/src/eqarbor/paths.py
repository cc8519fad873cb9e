"""Path and cycle witnesses: inextensible paths, long cycles, long paths.

Every witness re-validates its own adjacency against the host graph on
construction, so a bad sequence can never escape this module.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernel
from .errors import DegreeTooLow, NotConnected, TargetUnreachable
from .graph import Graph, degree_stats, is_connected, iter_bits, mask_of, vertices_of


@dataclass(frozen=True)
class PathWitness:
    """Ordered distinct vertices, consecutive ones adjacent in the host."""

    host: Graph
    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.seq:
            raise ValueError("a path has at least one vertex")
        if len(set(self.seq)) != len(self.seq):
            raise ValueError("path repeats a vertex")
        for a, b in zip(self.seq, self.seq[1:]):
            if not self.host.has_edge(a, b):
                raise ValueError(f"consecutive vertices {a},{b} are not adjacent in host")

    @property
    def length(self) -> int:
        """Edge count."""
        return len(self.seq) - 1


@dataclass(frozen=True)
class CycleWitness:
    """Ordered distinct vertices forming a cycle; the closing edge is implied."""

    host: Graph
    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.seq) < 3:
            raise ValueError("a cycle has at least three vertices")
        if len(set(self.seq)) != len(self.seq):
            raise ValueError("cycle repeats a vertex")
        for a, b in zip(self.seq, self.seq[1:]):
            if not self.host.has_edge(a, b):
                raise ValueError(f"consecutive vertices {a},{b} are not adjacent in host")
        if not self.host.has_edge(self.seq[-1], self.seq[0]):
            raise ValueError("closing edge missing in host")

    @property
    def length(self) -> int:
        """Edge count, equal to the number of vertices."""
        return len(self.seq)


def _greedy_inextensible(rows: tuple[int, ...], start: int) -> list[int]:
    """Both-ends greedy extension, smallest neighbor first."""
    seq = [start]
    used = 1 << start
    while True:
        grew = False
        cand = rows[seq[-1]] & ~used
        if cand:
            u = (cand & -cand).bit_length() - 1
            seq.append(u)
            used |= 1 << u
            grew = True
        cand = rows[seq[0]] & ~used
        if cand:
            u = (cand & -cand).bit_length() - 1
            seq.insert(0, u)
            used |= 1 << u
            grew = True
        if not grew:
            return seq


def inextensible_path(g: Graph, start: int) -> PathWitness:
    """A path through ``start`` that cannot be extended at either endpoint.

    Both endpoints end up with their whole neighborhood on the path, which is
    the only property the cycle extraction below needs; an isolated start
    vertex yields a single-vertex path.
    """
    if not 0 <= start < g.n:
        raise ValueError(f"start vertex {start} out of range")
    seq = _greedy_inextensible(g.adj, start)
    used = mask_of(seq)
    assert g.adj[seq[0]] & ~used == 0 and g.adj[seq[-1]] & ~used == 0, (
        "endpoint still extensible"
    )
    return PathWitness(g, tuple(seq))


def long_cycle(g: Graph, comp: int) -> CycleWitness:
    """A cycle inside component mask ``comp`` longer than its induced min degree.

    Takes an inextensible path in the induced subgraph and closes it at the
    farthest neighbor of its first vertex: with induced degrees at least 2
    that neighbor sits at index >= min degree, giving length >= min degree + 1.
    """
    if comp & ~g.vertex_mask or comp == 0:
        raise ValueError("component mask must be a nonempty subset of the vertices")
    verts = vertices_of(comp)
    induced = tuple(g.adj[v] & comp for v in range(g.n))
    dmin = min(induced[v].bit_count() for v in verts)
    if dmin < 2:
        raise DegreeTooLow(f"induced minimum degree {dmin} below 2")
    # connectivity of the induced subgraph
    reach = 1 << verts[0]
    frontier = reach
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= induced[v]
        frontier = nxt & ~reach
        reach |= frontier
    if reach != comp:
        raise NotConnected("component mask is not connected in the graph")
    seq = _greedy_inextensible(induced, verts[0])
    v0 = seq[0]
    i = max(idx for idx in range(1, len(seq)) if induced[v0] >> seq[idx] & 1)
    cycle = tuple(seq[: i + 1])
    assert len(cycle) >= dmin + 1
    return CycleWitness(g, cycle)


def long_path(g: Graph, target: int) -> PathWitness:
    """A path with at least ``target`` edges in a connected graph.

    Requires target <= 2*delta_min and |V| > 2*delta_min; under those bounds
    the rotation-extension kernel always reaches the target.  Any violation
    surfaces as TargetUnreachable.
    """
    if target < 0:
        raise ValueError("target must be nonnegative")
    dmin = degree_stats(g).delta_min
    if target > 2 * dmin:
        raise TargetUnreachable(
            f"target {target} exceeds twice the minimum degree ({2 * dmin})"
        )
    if g.n <= 2 * dmin:
        raise TargetUnreachable(
            f"order {g.n} does not exceed twice the minimum degree ({2 * dmin})"
        )
    if not is_connected(g):
        raise TargetUnreachable("graph is not connected")
    seq = _kernel.long_path_seq(g.n, g.adj, target)
    if seq is None:
        raise TargetUnreachable(f"path growth stalled below {target} edges")
    return PathWitness(g, tuple(seq))
