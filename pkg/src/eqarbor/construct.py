"""Equitable tree colorings for graphs with max degree at least half the order.

The dispatcher splits the admissible degree range into three windows (plus
the complete-like top end) and each window has its own construction:

* complete-like (max degree n-1): classes of one or two vertices in order.
* high window (3*Delta >= 2n-3): one matched complement pair plus a third
  vertex per larger class, leftover vertices in pairs.
* mid window (2n-6 <= 3*Delta < 2n-3): the residue of n mod 3 decides how one
  complement matching is padded into triples, with one merged 4-class when
  n = 3k+1.
* low window (n/2 <= Delta, 3*Delta < 2n-6): blocks of four consecutive
  vertices along a long complement path (complement connected) or along long
  complement cycles per component (complement disconnected), remaining
  classes built from complement-adjacent pairs plus a spare vertex.

Every class produced here induces a linear forest, not just a forest, and
every construction re-verifies its output before returning it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import AllocationFailed, ConstructionFailed, FormatError, OutOfScope
from .graph import (
    Graph,
    complement,
    components,
    degree_stats,
    induces_linear_forest,
    is_connected,
    mask_of,
    vertices_of,
)
from .matching import matching_of_size
from .paths import CycleWitness, long_cycle, long_path


class Regime(enum.Enum):
    COMPLETE_LIKE = "complete-like"
    HIGH = "high-window"
    MID_3K = "mid-window-3k"
    MID_3K1 = "mid-window-3k+1"
    MID_3K2 = "mid-window-3k+2"
    LOW_CONNECTED = "low-window-connected-complement"
    LOW_SPLIT = "low-window-split-complement"
    OUT_OF_SCOPE = "out-of-scope"


_MID_REGIMES = {0: Regime.MID_3K, 1: Regime.MID_3K1, 2: Regime.MID_3K2}


@dataclass(frozen=True)
class RegimePlan:
    """Dispatch decision plus the derived class-count arithmetic.

    ``gamma`` is the class count ceil((Delta+1)/2).  ``beta`` and ``mu``
    count the larger and smaller classes in the high window (sizes 3 and 2)
    and in the low window (sizes 4 and 3); ``k`` is n//3 in the mid window.
    Fields not applicable to the regime are None.
    """

    regime: Regime
    n: int
    max_degree: int
    gamma: int
    beta: int | None = None
    mu: int | None = None
    k: int | None = None


def gamma_of_max_degree(delta: int) -> int:
    """ceil((delta + 1) / 2), the class-count bound."""
    return (delta + 2) // 2


def gamma(g: Graph) -> int:
    """Class-count bound of a graph: ceil((max degree + 1) / 2)."""
    return gamma_of_max_degree(degree_stats(g).delta_max)


def plan_for(n: int, max_degree: int, complement_connected: bool | None = None) -> RegimePlan:
    """Classify an (order, max degree) pair into exactly one regime.

    All window comparisons are integer-exact (3*Delta against 2n-3 and 2n-6,
    2*Delta against n); the low window additionally needs to know whether the
    complement is connected, which callers with an actual graph supply.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    if not 0 <= max_degree <= n - 1:
        raise ValueError(f"max degree {max_degree} impossible at order {n}")
    g = gamma_of_max_degree(max_degree)
    if 2 * max_degree < n:
        return RegimePlan(Regime.OUT_OF_SCOPE, n, max_degree, g)
    if max_degree == n - 1:
        return RegimePlan(Regime.COMPLETE_LIKE, n, max_degree, g)
    if 3 * max_degree >= 2 * n - 3:
        beta, mu = n - 2 * g, 3 * g - n
        assert beta >= 0 and mu >= 0 and beta + mu == g
        return RegimePlan(Regime.HIGH, n, max_degree, g, beta=beta, mu=mu)
    if 3 * max_degree >= 2 * n - 6:
        k = n // 3
        assert g == (k + 1 if n % 3 == 2 else k)
        assert n - 1 - max_degree == k + 1  # complement min degree forced by the window
        return RegimePlan(_MID_REGIMES[n % 3], n, max_degree, g, k=k)
    beta, mu = n - 3 * g, 4 * g - n
    assert beta >= 1 and mu >= 1 and beta + mu == g and 4 * beta + 3 * mu == n
    if complement_connected is None:
        raise ValueError("low-window classification needs the complement connectivity flag")
    regime = Regime.LOW_CONNECTED if complement_connected else Regime.LOW_SPLIT
    return RegimePlan(regime, n, max_degree, g, beta=beta, mu=mu)


def classify_regime(g: Graph) -> RegimePlan:
    """Regime of an actual graph (resolves the low-window connectivity split)."""
    ds = degree_stats(g)
    if 2 * ds.delta_max >= g.n and 3 * ds.delta_max < 2 * g.n - 6:
        return plan_for(g.n, ds.delta_max, is_connected(complement(g)))
    return plan_for(g.n, ds.delta_max)


# ---------------------------------------------------------------------------
# Colorings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TreeColoring:
    """Ordered vertex classes (bitmasks) over a graph of order n.

    Carries no validity promise by itself; parsed documents may describe a
    wrong coloring on purpose.  The constructions in this module only return
    instances that passed their own verification.
    """

    n: int
    classes: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("order must be at least 1")
        if not self.classes:
            raise ValueError("a coloring has at least one class")
        full = (1 << self.n) - 1
        for i, mask in enumerate(self.classes):
            if mask & ~full:
                raise ValueError(f"class {i} contains vertices outside 0..{self.n - 1}")

    def class_vertices(self, i: int) -> tuple[int, ...]:
        return vertices_of(self.classes[i])


def _self_check(g: Graph, classes: list[int], want_classes: int) -> None:
    """Refuse to release a coloring that is not an equitable linear-forest partition."""
    if len(classes) != want_classes:
        raise ConstructionFailed(
            f"built {len(classes)} classes, expected {want_classes}"
        )
    union = 0
    total = 0
    for mask in classes:
        union |= mask
        total += mask.bit_count()
    if union != g.vertex_mask or total != g.n:
        raise ConstructionFailed("classes do not partition the vertex set")
    q, r = divmod(g.n, len(classes))
    allowed = {q, q + 1} if r else {q}
    for i, mask in enumerate(classes):
        if mask.bit_count() not in allowed:
            raise ConstructionFailed(f"class {i} has inequitable size {mask.bit_count()}")
        if not induces_linear_forest(g, mask):
            raise ConstructionFailed(f"class {i} does not induce a linear forest")


def _take(pool: Iterable[int], count: int) -> list[int]:
    out = []
    it = iter(pool)
    for _ in range(count):
        out.append(next(it))
    return out


def color_complete_like(g: Graph) -> TreeColoring:
    """Classes of one or two consecutive vertices; valid when max degree is n-1."""
    plan = classify_regime(g)
    if plan.regime is not Regime.COMPLETE_LIKE:
        raise ValueError(f"graph is not complete-like (regime {plan.regime.value})")
    n, gam = g.n, plan.gamma
    pairs = n - gam
    classes = [mask_of((2 * i, 2 * i + 1)) for i in range(pairs)]
    classes.extend(1 << v for v in range(2 * pairs, n))
    _self_check(g, classes, gam)
    return TreeColoring(n, tuple(classes))


def color_high_window(g: Graph) -> TreeColoring:
    """Matched complement pairs plus a third vertex, then leftover pairs."""
    plan = classify_regime(g)
    if plan.regime is not Regime.HIGH:
        raise ValueError(f"graph is not in the high window (regime {plan.regime.value})")
    n, beta, mu = g.n, plan.beta, plan.mu
    gc = complement(g)
    dc = n - 1 - plan.max_degree
    m = matching_of_size(gc, dc)
    zpool = [v for v in range(n) if not m.covered >> v & 1]
    used = 0
    classes = []
    for (u, v), z in zip(m.pairs[:beta], zpool):
        cls = mask_of((u, v, z))
        classes.append(cls)
        used |= cls
    rest = vertices_of(g.vertex_mask & ~used)
    assert len(rest) == 2 * mu
    classes.extend(mask_of(rest[2 * i : 2 * i + 2]) for i in range(mu))
    _self_check(g, classes, plan.gamma)
    return TreeColoring(n, tuple(classes))


def color_mid_window(g: Graph) -> TreeColoring:
    coloring, _ = color_mid_window_with_branch(g)
    return coloring


def color_mid_window_with_branch(g: Graph) -> tuple[TreeColoring, str]:
    """Mid-window construction; also reports which n = 3k+1 branch fired.

    The second branch ("fallback") pads the first matched pair with two
    unmatched vertices instead of merging two matched pairs.  A degree count
    suggests it can never be reached; it stays implemented, and its output
    goes through the same final verification as everything else.
    """
    plan = classify_regime(g)
    if plan.regime not in (Regime.MID_3K, Regime.MID_3K1, Regime.MID_3K2):
        raise ValueError(f"graph is not in the mid window (regime {plan.regime.value})")
    n, k = g.n, plan.k
    gc = complement(g)
    branch = "single"
    if plan.regime is Regime.MID_3K:
        m = matching_of_size(gc, k)
        zpool = [v for v in range(n) if not m.covered >> v & 1]
        assert len(zpool) == k
        classes = [mask_of((u, v, z)) for (u, v), z in zip(m.pairs, zpool)]
    elif plan.regime is Regime.MID_3K2:
        m = matching_of_size(gc, k)
        zpool = [v for v in range(n) if not m.covered >> v & 1]
        assert len(zpool) == k + 2
        classes = [mask_of((u, v, z)) for (u, v), z in zip(m.pairs, zpool[:k])]
        classes.append(mask_of(zpool[k:]))
    else:
        m = matching_of_size(gc, k + 1)
        merge = None
        pair_of = {}
        for idx, (u, v) in enumerate(m.pairs):
            pair_of[u] = idx
            pair_of[v] = idx
        matched = sorted(pair_of)
        for idx, (u, v) in enumerate(m.pairs):
            for a in (u, v):
                for c in matched:
                    if pair_of[c] != idx and gc.has_edge(a, c):
                        merge = (idx, pair_of[c])
                        break
                if merge:
                    break
            if merge:
                break
        if merge is not None:
            branch = "merge"
            p, q = merge
            first = mask_of(m.pairs[p]) | mask_of(m.pairs[q])
            rest_pairs = [pr for i, pr in enumerate(m.pairs) if i not in (p, q)]
            zpool = [v for v in range(n) if not m.covered >> v & 1]
        else:
            branch = "fallback"
            unmatched = [v for v in range(n) if not m.covered >> v & 1]
            z1, z2 = unmatched[0], unmatched[1]
            first = mask_of(m.pairs[0]) | mask_of((z1, z2))
            rest_pairs = list(m.pairs[1:k])
            spare = sorted(unmatched[2:] + list(m.pairs[k]))
            zpool = spare
        assert len(rest_pairs) == k - 1 and len(zpool) >= k - 1
        classes = [first]
        classes.extend(mask_of((u, v, z)) for (u, v), z in zip(rest_pairs, zpool))
    _self_check(g, classes, plan.gamma)
    return TreeColoring(n, tuple(classes)), branch


@dataclass(frozen=True)
class BlockAllocation:
    """Per-component cycle blocks for the split-complement low window.

    ``cycles[i]`` is the extracted cycle of complement component i,
    ``block_counts[i]`` how many 4-vertex blocks were cut from its front,
    ``segments[i]`` the unused arc of the cycle, and ``spare_pairs`` the
    consecutive (hence complement-adjacent) pairs those arcs supply, in
    component order.
    """

    cycles: tuple[CycleWitness, ...]
    block_counts: tuple[int, ...]
    blocks: tuple[int, ...]
    segments: tuple[tuple[int, ...], ...]
    spare_pairs: tuple[tuple[int, int], ...]


def allocate_blocks(gc: Graph, comps: list[int], beta: int) -> BlockAllocation:
    """Cut ``beta`` blocks of 4 consecutive cycle vertices across components.

    Greedy in component order; each component contributes at most
    floor(cycle_length / 4) blocks.  The leftover arcs are paired up
    consecutively to feed the 3-vertex classes.
    """
    cycles = [long_cycle(gc, comp) for comp in comps]
    remaining = beta
    counts = []
    for cw in cycles:
        take = min(len(cw.seq) // 4, remaining)
        counts.append(take)
        remaining -= take
    if remaining > 0:
        raise AllocationFailed(
            f"cycle capacity exhausted with {remaining} of {beta} blocks unplaced"
        )
    blocks = []
    segments = []
    spare_pairs = []
    for cw, take in zip(cycles, counts):
        seq = cw.seq
        blocks.extend(mask_of(seq[4 * j : 4 * j + 4]) for j in range(take))
        seg = seq[4 * take :]
        segments.append(seg)
        spare_pairs.extend((seg[2 * t], seg[2 * t + 1]) for t in range(len(seg) // 2))
    return BlockAllocation(tuple(cycles), tuple(counts), tuple(blocks), tuple(segments), tuple(spare_pairs))


def color_low_window(g: Graph) -> TreeColoring:
    """Blocks of 4 consecutive complement path/cycle vertices, then padded pairs."""
    plan = classify_regime(g)
    if plan.regime not in (Regime.LOW_CONNECTED, Regime.LOW_SPLIT):
        raise ValueError(f"graph is not in the low window (regime {plan.regime.value})")
    n, beta, mu = g.n, plan.beta, plan.mu
    gc = complement(g)
    if plan.regime is Regime.LOW_CONNECTED:
        dc = degree_stats(gc).delta_min
        pw = long_path(gc, 2 * dc)
        seq = pw.seq
        assert len(seq) >= 4 * beta + 2 * mu
        classes = [mask_of(seq[4 * i : 4 * i + 4]) for i in range(beta)]
        upairs = [seq[4 * beta + 2 * i : 4 * beta + 2 * i + 2] for i in range(mu)]
        used = mask_of(seq[: 4 * beta + 2 * mu])
        spares = vertices_of(g.vertex_mask & ~used)
        assert len(spares) == mu
        classes.extend(mask_of(up) | 1 << y for up, y in zip(upairs, spares))
    else:
        alloc = allocate_blocks(gc, components(gc), beta)
        if len(alloc.spare_pairs) < mu:
            raise AllocationFailed(
                f"leftover cycle arcs supply {len(alloc.spare_pairs)} pairs, need {mu}"
            )
        chosen = alloc.spare_pairs[:mu]
        used = 0
        for b in alloc.blocks:
            used |= b
        for u, v in chosen:
            used |= 1 << u | 1 << v
        spares = vertices_of(g.vertex_mask & ~used)
        assert len(spares) == mu
        classes = [mask_of(pr) | 1 << y for pr, y in zip(chosen, spares)]
        classes.extend(alloc.blocks)
    _self_check(g, classes, plan.gamma)
    return TreeColoring(n, tuple(classes))


_COLORERS = {
    Regime.COMPLETE_LIKE: color_complete_like,
    Regime.HIGH: color_high_window,
    Regime.MID_3K: color_mid_window,
    Regime.MID_3K1: color_mid_window,
    Regime.MID_3K2: color_mid_window,
    Regime.LOW_CONNECTED: color_low_window,
    Regime.LOW_SPLIT: color_low_window,
}


def equitable_tree_coloring(g: Graph) -> TreeColoring:
    """Equitable partition into gamma(g) classes, each inducing a linear forest.

    Raises OutOfScope when the max degree is below n/2; everything else in
    range is covered by exactly one window construction.
    """
    plan = classify_regime(g)
    if plan.regime is Regime.OUT_OF_SCOPE:
        raise OutOfScope(
            f"Delta < n/2: out of scope (Delta={plan.max_degree}, n={plan.n})"
        )
    return _COLORERS[plan.regime](g)


# ---------------------------------------------------------------------------
# Coloring document I/O: `s <k> <n>` then one `class <i>: <vertices>` per class
# ---------------------------------------------------------------------------


def write_coloring(c: TreeColoring) -> str:
    lines = [f"s {len(c.classes)} {c.n}"]
    for i in range(len(c.classes)):
        verts = " ".join(str(v) for v in c.class_vertices(i))
        lines.append(f"class {i}: {verts}".rstrip())
    return "\n".join(lines) + "\n"


def read_coloring(text: str) -> TreeColoring:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty coloring document")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "s":
        raise FormatError("coloring document must start with 's <k> <n>'")
    try:
        k, n = int(head[1]), int(head[2])
    except ValueError:
        raise FormatError("non-integer coloring header field") from None
    if k < 1 or n < 1:
        raise FormatError("coloring header must have k >= 1 and n >= 1")
    if len(lines) != k + 1:
        raise FormatError(f"expected {k} class lines, found {len(lines) - 1}")
    classes = []
    for i, line in enumerate(lines[1:]):
        left, sep, right = line.partition(":")
        if not sep or left.split() != ["class", str(i)]:
            raise FormatError(f"expected 'class {i}: ...', got {line!r}")
        mask = 0
        for tok in right.split():
            try:
                v = int(tok)
            except ValueError:
                raise FormatError(f"class {i}: non-integer vertex {tok!r}") from None
            if not 0 <= v < n:
                raise FormatError(f"class {i}: vertex {v} out of range for n={n}")
            mask |= 1 << v
        classes.append(mask)
    return TreeColoring(n, tuple(classes))
