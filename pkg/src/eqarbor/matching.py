"""Maximum matchings in general graphs.

The search (greedy seed plus augmenting paths with blossom contraction) lives
in the kernel backends; this module wraps it in a validated value type and a
deterministic size-k truncation.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernel
from .errors import InsufficientMatching
from .graph import Graph, mask_of


@dataclass(frozen=True)
class Matching:
    """Pairwise vertex-disjoint edges of a host graph."""

    host: Graph
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen = 0
        for u, v in self.pairs:
            if not (0 <= u < v < self.host.n):
                raise ValueError(f"pair ({u},{v}) is not an ordered vertex pair")
            if not self.host.has_edge(u, v):
                raise ValueError(f"pair ({u},{v}) is not an edge of the host graph")
            bits = 1 << u | 1 << v
            if seen & bits:
                raise ValueError(f"pair ({u},{v}) shares a vertex with an earlier pair")
            seen |= bits

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def covered(self) -> int:
        """Bitmask of matched vertices."""
        return mask_of(v for pair in self.pairs for v in pair)


def maximum_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching of g.

    Deterministic: the kernel scans vertices and neighbors in ascending
    order, and the pairs come out sorted by their smaller endpoint.
    """
    mates = _kernel.max_matching(g.n, g.adj)
    pairs = tuple((v, mates[v]) for v in range(g.n) if mates[v] > v)
    return Matching(g, pairs)


def matching_of_size(g: Graph, k: int) -> Matching:
    """Exactly k disjoint edges of g, the k pairs with smallest min endpoints.

    Raises InsufficientMatching when the matching number of g is below k;
    callers whose degree preconditions promise k pairs treat that as a
    defect and abort.
    """
    if k < 0:
        raise ValueError("matching size must be nonnegative")
    full = maximum_matching(g)
    if full.size < k:
        raise InsufficientMatching(
            f"graph has matching number {full.size}, below the requested {k}"
        )
    return Matching(g, full.pairs[:k])
