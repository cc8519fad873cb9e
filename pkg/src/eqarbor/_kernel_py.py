"""Pure-Python kernels for the hot inner loops.

The compiled module ``eqarbor._speedups`` mirrors every function here with
identical semantics, including tie-breaking, so the two backends produce
bit-identical results.  Keep the two in lockstep: the parity test suite
compares their outputs exhaustively on small inputs.

Adjacency is passed as a sequence of int bitset rows (``graph.Graph.adj``).
All scans run in ascending vertex order, which is what pins determinism.
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "py"


# ---------------------------------------------------------------------------
# Maximum matching (augmenting paths with blossom contraction)
# ---------------------------------------------------------------------------


def max_matching(n: int, rows: Sequence[int]) -> list[int]:
    """Mate array of a maximum matching; -1 marks unmatched vertices.

    Greedy seed, then one augmenting-path search per remaining exposed vertex.
    The search is a FIFO traversal over even-level vertices with odd cycles
    contracted on the fly, so it is exact on general (non-bipartite) graphs.
    """
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            m = rows[v]
            while m:
                u = (m & -m).bit_length() - 1
                if match[u] == -1:
                    match[u] = v
                    match[v] = u
                    break
                m &= m - 1
    p = [-1] * n
    base = list(range(n))
    for root in range(n):
        if match[root] != -1:
            continue
        for i in range(n):
            p[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        queue = [root]
        qi = 0
        finish = -1
        while qi < len(queue) and finish == -1:
            v = queue[qi]
            qi += 1
            m = rows[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if base[v] == base[u] or match[v] == u:
                    continue
                if u == root or (match[u] != -1 and p[match[u]] != -1):
                    curbase = _lca(match, base, p, v, u)
                    blossom = [False] * n
                    _mark_path(match, base, p, blossom, v, curbase, u)
                    _mark_path(match, base, p, blossom, u, curbase, v)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[u] == -1:
                    p[u] = v
                    if match[u] == -1:
                        finish = u
                        break
                    used[match[u]] = True
                    queue.append(match[u])
        if finish != -1:
            u = finish
            while u != -1:
                pv = p[u]
                ppv = match[pv]
                match[u] = pv
                match[pv] = u
                u = ppv
    return match


def _lca(match: list[int], base: list[int], p: list[int], a: int, b: int) -> int:
    seen = [False] * len(match)
    a = base[a]
    while True:
        seen[a] = True
        if match[a] == -1:
            break
        a = base[p[match[a]]]
    b = base[b]
    while not seen[b]:
        b = base[p[match[b]]]
    return b


def _mark_path(
    match: list[int],
    base: list[int],
    p: list[int],
    blossom: list[bool],
    v: int,
    b: int,
    child: int,
) -> None:
    while base[v] != b:
        blossom[base[v]] = True
        blossom[base[match[v]]] = True
        p[v] = child
        child = match[v]
        v = p[match[v]]


def dp_matching_size(n: int, rows: Sequence[int]) -> int:
    """Exact maximum matching size by subset dynamic programming (n <= 20).

    Independent of the blossom search above; serves as its oracle.
    """
    if n > 20:
        raise ValueError("subset DP limited to n <= 20")
    full = 1 << n
    f = bytearray(full)
    for m in range(1, full):
        v = (m & -m).bit_length() - 1
        rest = m & (m - 1)
        best = f[rest]
        nb = rows[v] & rest
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            c = 1 + f[rest & ~(1 << u)]
            if c > best:
                best = c
        f[m] = best
    return f[full - 1]


def match_equiv_range(n: int, lo: int, hi: int) -> list[int]:
    """Adjacency masks in [lo, hi) where blossom and DP matching sizes differ.

    Masks index the C(n,2) vertex pairs in lexicographic order, pair (0,1)
    at bit 0.  Returns the disagreeing masks (empty means full agreement).
    """
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bad = []
    for mask in range(lo, hi):
        rows = [0] * n
        m = mask
        while m:
            b = (m & -m).bit_length() - 1
            m &= m - 1
            u, v = pairs[b]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        mates = max_matching(n, rows)
        size = sum(1 for v in range(n) if mates[v] > v)
        if size != dp_matching_size(n, rows):
            bad.append(mask)
    return bad


# ---------------------------------------------------------------------------
# Long paths by rotation and extension
# ---------------------------------------------------------------------------


def long_path_seq(n: int, rows: Sequence[int], target: int) -> list[int] | None:
    """Vertex sequence of a path with at least ``target`` edges, or None on stall.

    Grows an inextensible path greedily from vertex 0, then repeatedly turns
    it into a cycle through all its vertices (via the closing edge or a
    crossing pair of chords) and splices in an outside neighbor.  Every
    round gains a vertex, so at most n rounds run.
    """
    path = [0]
    onpath = 1

    def extend_tail() -> bool:
        nonlocal onpath
        grew = False
        while True:
            cand = rows[path[-1]] & ~onpath
            if not cand:
                return grew
            u = (cand & -cand).bit_length() - 1
            path.append(u)
            onpath |= 1 << u
            grew = True

    for _ in range(n + 1):
        while True:
            grew = extend_tail()
            path.reverse()
            grew |= extend_tail()
            if not grew:
                break
        m = len(path) - 1
        if m >= target:
            return path
        head, tail = path[0], path[-1]
        if rows[head] >> tail & 1:
            cyc = path[:]
        else:
            cyc = None
            for i in range(m):
                if rows[head] >> path[i + 1] & 1 and rows[tail] >> path[i] & 1:
                    cyc = path[: i + 1] + path[i + 1 :][::-1]
                    break
            if cyc is None:
                return None
        nb = 0
        for c in cyc:
            nb |= rows[c]
        nb &= ~onpath
        if not nb:
            return None
        w = (nb & -nb).bit_length() - 1
        j = 0
        while not rows[w] >> cyc[j] & 1:
            j += 1
        path = [w] + cyc[j:] + cyc[:j]
        onpath |= 1 << w
    return None  # unreachable: each round adds a vertex


# ---------------------------------------------------------------------------
# Exact equitable tree-coloring decision (backtracking)
# ---------------------------------------------------------------------------


def a_eq_exists(n: int, rows: Sequence[int], k: int) -> list[int] | None:
    """Class bitmasks of an equitable k-tree-coloring, or None if none exists.

    Classes carry fixed size quotas (n mod k classes of ceil(n/k), the rest
    floor(n/k)).  Vertices are assigned in index order; a shared union-find
    with an undo trail keeps every class acyclic incrementally.  Empty
    classes of equal quota are interchangeable, so only the first empty
    class of each quota kind is ever tried.
    """
    q, r = divmod(n, k)
    quota = [q + 1] * r + [q] * (k - r)
    class_mask = [0] * k
    count = [0] * k
    parent = list(range(n))
    size = [1] * n
    trail: list[tuple[int, int]] = []

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def place(v: int, c: int) -> int | None:
        """Union v with its neighbors inside class c; None if that closes a cycle."""
        mark = len(trail)
        mask = rows[v] & class_mask[c]
        while mask:
            u = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            ru = find(u)
            rv = find(v)
            if ru == rv:
                while len(trail) > mark:
                    a, b = trail.pop()
                    parent[a] = a
                    size[b] -= size[a]
                return None
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            trail.append((rv, ru))
        return mark

    def undo(mark: int) -> None:
        while len(trail) > mark:
            a, b = trail.pop()
            parent[a] = a
            size[b] -= size[a]

    def bt(v: int) -> bool:
        if v == n:
            return True
        tried_hi = False
        tried_lo = False
        for c in range(k):
            if count[c] == quota[c]:
                continue
            if count[c] == 0:
                if quota[c] == q + 1:
                    if tried_hi:
                        continue
                    tried_hi = True
                else:
                    if tried_lo:
                        continue
                    tried_lo = True
            mark = place(v, c)
            if mark is None:
                continue
            class_mask[c] |= 1 << v
            count[c] += 1
            if bt(v + 1):
                return True
            class_mask[c] ^= 1 << v
            count[c] -= 1
            undo(mark)
        return False

    if bt(0):
        return list(class_mask)
    return None
