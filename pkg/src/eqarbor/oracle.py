"""Ground truth at desk scale.

Coloring verification, the exact equitable-tree-coloring decision by
backtracking, exhaustive sweeps over all labeled graphs of a small order,
and a seeded in-regime random graph generator.
"""

from __future__ import annotations

import enum
import os
import warnings
from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import _kernel
from .construct import TreeColoring, equitable_tree_coloring, gamma_of_max_degree
from .errors import ArborError, CapExceeded
from .graph import Graph, induces_forest, induces_linear_forest
from .matching import Matching

DEFAULT_CAP = 12

#: Edge-probability window the generator samples from.
GEN_P_RANGE = (0.30, 0.90)


class FailureKind(enum.Enum):
    NOT_PARTITION = "NotPartition"
    NOT_EQUITABLE = "NotEquitable"
    NOT_FOREST = "NotForest"
    NOT_LINEAR_FOREST = "NotLinearForest"


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of checking a coloring against a graph.

    ``failures`` carries (class index, kind); index -1 flags a global
    partition defect (uncovered vertices).  Linear-forest violations are
    always listed in ``linear_violations`` but enter ``failures`` (and so
    flip ``ok``) only when the check ran in strict mode.
    """

    ok: bool
    class_count: int
    size_histogram: dict[int, int]
    failures: tuple[tuple[int, FailureKind], ...]
    linear_violations: tuple[int, ...] = ()

    def to_text(self) -> str:
        lines = [f"ok {'yes' if self.ok else 'no'}", f"classes {self.class_count}"]
        for size in sorted(self.size_histogram, reverse=True):
            lines.append(f"size {size} x {self.size_histogram[size]}")
        for idx, kind in self.failures:
            where = "global" if idx < 0 else f"class {idx}"
            lines.append(f"fail {where}: {kind.value}")
        if self.linear_violations:
            lines.append("linear " + " ".join(str(i) for i in self.linear_violations))
        return "\n".join(lines) + "\n"


def verify(g: Graph, c: TreeColoring, strict_linear: bool = False) -> VerifyReport:
    """Check partition, equitable sizes, and per-class acyclicity.

    Non-strict mode accepts any forest classes; strict mode additionally
    requires every class to induce a disjoint union of paths.
    """
    if c.n != g.n:
        raise ValueError(f"coloring is over {c.n} vertices, graph has {g.n}")
    k = len(c.classes)
    failures: list[tuple[int, FailureKind]] = []
    linear: list[int] = []
    q, r = divmod(g.n, k)
    allowed = {q, q + 1} if r else {q}
    union = 0
    sizes: Counter[int] = Counter()
    for i, mask in enumerate(c.classes):
        if mask & union:
            failures.append((i, FailureKind.NOT_PARTITION))
        union |= mask
        size = mask.bit_count()
        sizes[size] += 1
        if size not in allowed:
            failures.append((i, FailureKind.NOT_EQUITABLE))
        if not induces_forest(g, mask):
            failures.append((i, FailureKind.NOT_FOREST))
        elif not induces_linear_forest(g, mask):
            linear.append(i)
            if strict_linear:
                failures.append((i, FailureKind.NOT_LINEAR_FOREST))
    if union != g.vertex_mask:
        failures.append((-1, FailureKind.NOT_PARTITION))
    return VerifyReport(
        ok=not failures,
        class_count=k,
        size_histogram=dict(sizes),
        failures=tuple(failures),
        linear_violations=tuple(linear),
    )


# ---------------------------------------------------------------------------
# Exact oracle
# ---------------------------------------------------------------------------


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceeded(f"order {n} exceeds the exact-oracle cap {cap}")
    if n > DEFAULT_CAP:
        warnings.warn(
            f"exact oracle on {n} vertices (default cap {DEFAULT_CAP}); "
            "expect exponential runtime",
            RuntimeWarning,
            stacklevel=3,
        )


def find_equitable_coloring(g: Graph, k: int, cap: int = DEFAULT_CAP) -> TreeColoring | None:
    """Witness of an equitable k-tree-coloring, or None if none exists.

    Exact decision: backtracking over class assignments with size quotas and
    incremental acyclicity pruning.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"class count {k} out of range 1..{g.n}")
    _check_cap(g.n, cap)
    masks = _kernel.a_eq_exists(g.n, g.adj, k)
    if masks is None:
        return None
    witness = TreeColoring(g.n, tuple(masks))
    rep = verify(g, witness)
    assert rep.ok, "oracle produced an invalid witness"
    return witness


def exists_equitable_k_tree_coloring(g: Graph, k: int, cap: int = DEFAULT_CAP) -> bool:
    return find_equitable_coloring(g, k, cap) is not None


def exact_a_eq(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Minimum k admitting an equitable k-tree-coloring.

    Probes k = 1, 2, ... in order; existence is not assumed monotone in k,
    so the minimum is taken literally.
    """
    _check_cap(g.n, cap)
    for k in range(1, g.n + 1):
        if _kernel.a_eq_exists(g.n, g.adj, k) is not None:
            return k
    raise AssertionError("k = n always admits singleton classes")  # pragma: no cover


def brute_matching_size(g: Graph, cap: int = 20) -> int:
    """Maximum matching size by branch-and-memo over vertex subsets.

    Independent reference for the blossom search: branches on the lowest
    remaining vertex (leave it unmatched, or match it to each neighbor).
    """
    if g.n > cap:
        raise CapExceeded(f"order {g.n} exceeds the brute-force cap {cap}")
    adj = g.adj
    memo: dict[int, int] = {0: 0}

    def rec(mask: int) -> int:
        got = memo.get(mask)
        if got is not None:
            return got
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        best = rec(rest)
        nb = adj[v] & rest
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            cand = 1 + rec(rest & ~(1 << u))
            if cand > best:
                best = cand
        memo[mask] = best
        return best

    return rec(g.vertex_mask)


def assert_no_augmenting_path(m: Matching) -> None:
    """Certify maximality of a matching: its size matches the brute-force optimum."""
    assert m.size == brute_matching_size(m.host)


# ---------------------------------------------------------------------------
# Exhaustive sweeps over all labeled graphs of order n
# ---------------------------------------------------------------------------

SWEEP_MAX_ORDER = 7


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_table(n: int) -> list[tuple[int, int]]:
    """Canonical bit order for adjacency masks: pair (0,1) at bit 0, then lex."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def graph_from_mask(n: int, mask: int) -> Graph:
    rows = [0] * n
    for (u, v) in pair_table(n):
        if mask & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        mask >>= 1
    return Graph(n, tuple(rows))


def mask_of_graph(g: Graph) -> int:
    mask = 0
    for bit, (u, v) in enumerate(pair_table(g.n)):
        if g.has_edge(u, v):
            mask |= 1 << bit
    return mask


@dataclass(frozen=True)
class SweepReport:
    """Aggregate of one exhaustive sweep; failure lists hold adjacency masks."""

    n: int
    graphs_tested: int
    in_regime: int
    construction_failures: tuple[int, ...] = ()
    conjecture_violations: tuple[int, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.construction_failures and not self.conjecture_violations

    def to_text(self) -> str:
        lines = [f"FAIL {mask:x}" for mask in self.construction_failures]
        lines.extend(f"FAIL {mask:x}" for mask in self.conjecture_violations)
        total = len(self.construction_failures) + len(self.conjecture_violations)
        lines.append(
            f"SWEEP n={self.n} tested={self.graphs_tested} "
            f"regime={self.in_regime} failures={total}"
        )
        return "\n".join(lines) + "\n"


def _sweep_chunk(args: tuple[int, int, int, bool]) -> tuple[int, int, list[int], list[int]]:
    n, lo, hi, regime_only = args
    pairs = pair_table(n)
    in_regime = 0
    construction_failures: list[int] = []
    conjecture_violations: list[int] = []
    for mask in range(lo, hi):
        rows = [0] * n
        mm = mask
        while mm:
            b = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            u, v = pairs[b]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        delta = max(map(int.bit_count, rows))
        regime = 2 * delta >= n
        if regime:
            in_regime += 1
        g = Graph(n, tuple(rows))
        if regime_only:
            if not regime:
                continue
            try:
                coloring = equitable_tree_coloring(g)
            except ArborError:
                construction_failures.append(mask)
                continue
            rep = verify(g, coloring, strict_linear=True)
            if not rep.ok or len(coloring.classes) != gamma_of_max_degree(delta):
                construction_failures.append(mask)
        else:
            if exact_a_eq(g) > gamma_of_max_degree(delta):
                conjecture_violations.append(mask)
    return hi - lo, in_regime, construction_failures, conjecture_violations


def _resolve_threads(threads: int | None) -> int:
    if threads is None:
        threads = os.cpu_count() or 1
        env = os.environ.get("ARBOR_THREADS")
        if env:
            try:
                threads = min(threads, max(1, int(env)))
            except ValueError:
                pass
    return max(1, threads)


def sweep_conjecture(n: int, regime_only: bool = True, threads: int | None = None) -> SweepReport:
    """Check the class-count bound on every labeled graph of order n.

    ``regime_only`` runs the window constructions plus a strict verify on
    each graph with max degree >= n/2; otherwise every graph is measured
    with the exact oracle against its bound.  Workers own disjoint mask
    ranges and their partial reports merge associatively.
    """
    if not 1 <= n <= SWEEP_MAX_ORDER:
        raise CapExceeded(f"sweep enumerates 2^(n(n-1)/2) graphs; n must be 1..{SWEEP_MAX_ORDER}")
    total = 1 << pair_count(n)
    threads = _resolve_threads(threads)
    if threads == 1 or total < 4096:
        chunks = [_sweep_chunk((n, 0, total, regime_only))]
    else:
        step = (total + 4 * threads - 1) // (4 * threads)
        jobs = [(n, lo, min(lo + step, total), regime_only) for lo in range(0, total, step)]
        import multiprocessing

        with multiprocessing.Pool(threads) as pool:
            chunks = pool.map(_sweep_chunk, jobs)
    tested = sum(c[0] for c in chunks)
    in_regime = sum(c[1] for c in chunks)
    failures = [m for c in chunks for m in c[2]]
    violations = [m for c in chunks for m in c[3]]
    return SweepReport(n, tested, in_regime, tuple(failures), tuple(violations))


# ---------------------------------------------------------------------------
# Seeded in-regime generator
# ---------------------------------------------------------------------------


def gen_random(n: int, seed: int, p_range: tuple[float, float] = GEN_P_RANGE) -> Graph:
    """Random graph with max degree forced to at least ceil(n/2).

    Samples an edge probability from ``p_range``, draws the graph, then adds
    edges at a max-degree vertex (smallest non-neighbors first) until the
    degree bound holds.  Deterministic for a fixed seed.
    """
    if n < 2:
        raise ValueError("generator needs at least 2 vertices")
    rng = np.random.default_rng(seed)
    p = rng.uniform(*p_range)
    upper = np.triu(rng.random((n, n)) < p, 1)
    sym = upper | upper.T
    packed = np.packbits(sym, axis=1, bitorder="little")
    rows = [int.from_bytes(packed[i].tobytes(), "little") for i in range(n)]
    need = (n + 1) // 2
    degs = [r.bit_count() for r in rows]
    dmax = max(degs)
    if dmax < need:
        v = degs.index(dmax)
        full = (1 << n) - 1
        cand = full & ~rows[v] & ~(1 << v)
        while degs[v] < need:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            rows[v] |= 1 << u
            rows[u] |= 1 << v
            degs[v] += 1
    return Graph(n, tuple(rows))
