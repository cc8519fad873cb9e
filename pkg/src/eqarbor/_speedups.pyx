# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: the hot inner loops of eqarbor.

Mirrors ``eqarbor._kernel_py`` function by function with identical semantics
and tie-breaking; the parity tests compare the two backends bit for bit.
Adjacency rows arrive as Python int bitsets and are unpacked into little-
endian 64-bit word arrays.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

cdef extern from *:
    """
    #include <stdint.h>
    static inline int eq_ctz64(uint64_t x) { return __builtin_ctzll(x); }
    """
    int eq_ctz64(unsigned long long x) nogil

ctypedef unsigned long long u64

BACKEND = "c"


cdef void* _xmalloc(size_t nbytes) except NULL:
    cdef void* p = malloc(nbytes if nbytes else 1)
    if p == NULL:
        raise MemoryError()
    return p


cdef int _load_rows(object rows, int n, int W, u64 *buf) except -1:
    """Unpack Python int bitsets into n rows of W little-endian words."""
    cdef int i
    cdef bytes b
    for i in range(n):
        b = (<object>rows[i]).to_bytes(W << 3, "little")
        memcpy(buf + i * W, <const char*>b, W << 3)
    return 0


cdef inline bint _testbit(u64 *row, int v) nogil:
    return (row[v >> 6] >> (v & 63)) & 1


# ---------------------------------------------------------------------------
# Maximum matching (augmenting paths with blossom contraction)
# ---------------------------------------------------------------------------


cdef int _mm_lca(int n, int *match, int *base, int *p, unsigned char *seen, int a, int b) nogil:
    memset(seen, 0, n)
    a = base[a]
    while True:
        seen[a] = 1
        if match[a] == -1:
            break
        a = base[p[match[a]]]
    b = base[b]
    while not seen[b]:
        b = base[p[match[b]]]
    return b


cdef void _mm_mark_path(int *match, int *base, int *p, unsigned char *blos,
                        int v, int b, int child) nogil:
    while base[v] != b:
        blos[base[v]] = 1
        blos[base[match[v]]] = 1
        p[v] = child
        child = match[v]
        v = p[match[v]]


cdef int _mm_core(int n, int W, u64 *adj, int *match, int *p, int *base,
                  int *queue, unsigned char *used, unsigned char *blos,
                  unsigned char *seen) nogil:
    """Fill ``match`` with a maximum matching's mates; return its size."""
    cdef int v, u, w, b, i, root, qi, qlen, finish, curbase, pv, ppv
    cdef bint seeded
    cdef u64 x
    for v in range(n):
        match[v] = -1
    # greedy seed: ascending vertices, smallest unmatched neighbor
    for v in range(n):
        if match[v] != -1:
            continue
        seeded = 0
        for w in range(W):
            x = adj[v * W + w]
            while x:
                b = eq_ctz64(x)
                x &= x - 1
                u = (w << 6) + b
                if match[u] == -1:
                    match[u] = v
                    match[v] = u
                    seeded = 1
                    break
            if seeded:
                break
    for root in range(n):
        if match[root] != -1:
            continue
        for i in range(n):
            p[i] = -1
            base[i] = i
        memset(used, 0, n)
        used[root] = 1
        queue[0] = root
        qlen = 1
        qi = 0
        finish = -1
        while qi < qlen and finish == -1:
            v = queue[qi]
            qi += 1
            for w in range(W):
                x = adj[v * W + w]
                while x:
                    b = eq_ctz64(x)
                    x &= x - 1
                    u = (w << 6) + b
                    if base[v] == base[u] or match[v] == u:
                        continue
                    if u == root or (match[u] != -1 and p[match[u]] != -1):
                        curbase = _mm_lca(n, match, base, p, seen, v, u)
                        memset(blos, 0, n)
                        _mm_mark_path(match, base, p, blos, v, curbase, u)
                        _mm_mark_path(match, base, p, blos, u, curbase, v)
                        for i in range(n):
                            if blos[base[i]]:
                                base[i] = curbase
                                if not used[i]:
                                    used[i] = 1
                                    queue[qlen] = i
                                    qlen += 1
                    elif p[u] == -1:
                        p[u] = v
                        if match[u] == -1:
                            finish = u
                            break
                        used[match[u]] = 1
                        queue[qlen] = match[u]
                        qlen += 1
                if finish != -1:
                    break
        if finish != -1:
            u = finish
            while u != -1:
                pv = p[u]
                ppv = match[pv]
                match[u] = pv
                match[pv] = u
                u = ppv
    cdef int size = 0
    for v in range(n):
        if match[v] > v:
            size += 1
    return size


def max_matching(int n, rows):
    """Mate array of a maximum matching; -1 marks unmatched vertices."""
    cdef int W = (n + 63) >> 6
    cdef u64 *adj = <u64*>_xmalloc(<size_t>n * W * sizeof(u64))
    cdef int *match = <int*>_xmalloc(4 * <size_t>n * sizeof(int))
    cdef int *p = match + n
    cdef int *base = match + 2 * n
    cdef int *queue = match + 3 * n
    cdef unsigned char *used = <unsigned char*>_xmalloc(3 * <size_t>n)
    cdef unsigned char *blos = used + n
    cdef unsigned char *seen = used + 2 * n
    cdef int v
    try:
        _load_rows(rows, n, W, adj)
        _mm_core(n, W, adj, match, p, base, queue, used, blos, seen)
        return [match[v] for v in range(n)]
    finally:
        free(adj)
        free(match)
        free(used)


# ---------------------------------------------------------------------------
# Subset-DP matching oracle and the blossom-vs-DP equivalence sweep
# ---------------------------------------------------------------------------


cdef int _dp_core(int n, u64 *rows, unsigned char *f) nogil:
    cdef u64 full = ((<u64>1) << n) - 1
    cdef u64 m, rest, nb
    cdef int v, u, best, c
    f[0] = 0
    m = 1
    while m <= full:
        v = eq_ctz64(m)
        rest = m & (m - 1)
        best = f[rest]
        nb = rows[v] & rest
        while nb:
            u = eq_ctz64(nb)
            nb &= nb - 1
            c = 1 + f[rest & ~((<u64>1) << u)]
            if c > best:
                best = c
        f[m] = best
        m += 1
    return f[full]


def dp_matching_size(int n, rows):
    """Exact maximum matching size by subset dynamic programming (n <= 20)."""
    if n > 20:
        raise ValueError("subset DP limited to n <= 20")
    cdef u64 *r = <u64*>_xmalloc(<size_t>n * sizeof(u64))
    cdef unsigned char *f = <unsigned char*>_xmalloc(<size_t>1 << n)
    cdef int i, out
    try:
        for i in range(n):
            r[i] = <u64>rows[i]
        out = _dp_core(n, r, f)
        return out
    finally:
        free(r)
        free(f)


def match_equiv_range(int n, object lo, object hi):
    """Adjacency masks in [lo, hi) where blossom and DP matching sizes differ."""
    if n > 20:
        raise ValueError("equivalence sweep limited to n <= 20")
    cdef u64 clo = <u64>lo
    cdef u64 chi = <u64>hi
    cdef int np = n * (n - 1) // 2
    cdef int *pu = <int*>_xmalloc(2 * <size_t>(np if np else 1) * sizeof(int))
    cdef int *pv = pu + (np if np else 1)
    cdef int idx = 0, u, v, b, size
    for u in range(n):
        for v in range(u + 1, n):
            pu[idx] = u
            pv[idx] = v
            idx += 1
    cdef u64 *adj = <u64*>_xmalloc(<size_t>n * sizeof(u64))
    cdef unsigned char *f = <unsigned char*>_xmalloc(<size_t>1 << n)
    cdef int *match = <int*>_xmalloc(4 * <size_t>n * sizeof(int))
    cdef int *p = match + n
    cdef int *base = match + 2 * n
    cdef int *queue = match + 3 * n
    cdef unsigned char *used = <unsigned char*>_xmalloc(3 * <size_t>n)
    cdef unsigned char *blos = used + n
    cdef unsigned char *seen = used + 2 * n
    cdef u64 mask, mm
    bad = []
    try:
        mask = clo
        while mask < chi:
            memset(adj, 0, <size_t>n * sizeof(u64))
            mm = mask
            while mm:
                b = eq_ctz64(mm)
                mm &= mm - 1
                adj[pu[b]] |= (<u64>1) << pv[b]
                adj[pv[b]] |= (<u64>1) << pu[b]
            size = _mm_core(n, 1, adj, match, p, base, queue, used, blos, seen)
            if size != _dp_core(n, adj, f):
                bad.append(mask)
            mask += 1
        return bad
    finally:
        free(pu)
        free(adj)
        free(f)
        free(match)
        free(used)


# ---------------------------------------------------------------------------
# Long paths by rotation and extension
# ---------------------------------------------------------------------------


cdef bint _lp_extend_tail(int n, int W, u64 *adj, int *path, int *plen, u64 *onpath) nogil:
    cdef bint grew = 0
    cdef int w, u
    cdef u64 x
    while True:
        u = -1
        for w in range(W):
            x = adj[path[plen[0] - 1] * W + w] & ~onpath[w]
            if x:
                u = (w << 6) + eq_ctz64(x)
                break
        if u == -1:
            return grew
        path[plen[0]] = u
        plen[0] += 1
        onpath[u >> 6] |= (<u64>1) << (u & 63)
        grew = 1


cdef void _lp_reverse(int *path, int lo, int hi) nogil:
    cdef int t
    while lo < hi:
        t = path[lo]
        path[lo] = path[hi]
        path[hi] = t
        lo += 1
        hi -= 1


def long_path_seq(int n, rows, int target):
    """Vertex sequence of a path with >= target edges, or None on stall."""
    cdef int W = (n + 63) >> 6
    cdef u64 *adj = <u64*>_xmalloc(<size_t>n * W * sizeof(u64))
    cdef u64 *onpath = <u64*>_xmalloc(2 * <size_t>W * sizeof(u64))
    cdef u64 *tmp = onpath + W
    cdef int *path = <int*>_xmalloc(2 * <size_t>n * sizeof(int))
    cdef int *newpath = path + n
    cdef int *swap
    cdef int plen, rounds, m, head, tail, i, j, w, wv
    cdef bint grew, found
    cdef u64 x
    try:
        _load_rows(rows, n, W, adj)
        memset(onpath, 0, <size_t>W * sizeof(u64))
        path[0] = 0
        plen = 1
        onpath[0] = 1
        for rounds in range(n + 1):
            while True:
                grew = _lp_extend_tail(n, W, adj, path, &plen, onpath)
                _lp_reverse(path, 0, plen - 1)
                grew |= _lp_extend_tail(n, W, adj, path, &plen, onpath)
                if not grew:
                    break
            m = plen - 1
            if m >= target:
                return [path[i] for i in range(plen)]
            head = path[0]
            tail = path[m]
            if not _testbit(adj + head * W, tail):
                found = 0
                for i in range(m):
                    if _testbit(adj + head * W, path[i + 1]) and _testbit(adj + tail * W, path[i]):
                        found = 1
                        break
                if not found:
                    return None
                _lp_reverse(path, i + 1, m)
            # path now holds the cycle order
            memset(tmp, 0, <size_t>W * sizeof(u64))
            for i in range(plen):
                for w in range(W):
                    tmp[w] |= adj[path[i] * W + w]
            wv = -1
            for w in range(W):
                x = tmp[w] & ~onpath[w]
                if x:
                    wv = (w << 6) + eq_ctz64(x)
                    break
            if wv == -1:
                return None
            j = 0
            while not _testbit(adj + wv * W, path[j]):
                j += 1
            newpath[0] = wv
            for i in range(plen - j):
                newpath[1 + i] = path[j + i]
            for i in range(j):
                newpath[1 + plen - j + i] = path[i]
            swap = path
            path = newpath
            newpath = swap
            plen += 1
            onpath[wv >> 6] |= (<u64>1) << (wv & 63)
        return None
    finally:
        if path < newpath:
            free(path)
        else:
            free(newpath)
        free(adj)
        free(onpath)


# ---------------------------------------------------------------------------
# Exact equitable tree-coloring decision (backtracking, n <= 63)
# ---------------------------------------------------------------------------


cdef struct AeqCtx:
    int n
    int k
    int hi_quota
    u64 *rows
    u64 *class_mask
    int *count
    int *quota
    int *parent
    int *size
    int *trail_a
    int *trail_b
    int trail_len


cdef int _aeq_find(AeqCtx *c, int x) nogil:
    while c.parent[x] != x:
        x = c.parent[x]
    return x


cdef void _aeq_undo(AeqCtx *c, int mark) nogil:
    cdef int a, b
    while c.trail_len > mark:
        c.trail_len -= 1
        a = c.trail_a[c.trail_len]
        b = c.trail_b[c.trail_len]
        c.parent[a] = a
        c.size[b] -= c.size[a]


cdef int _aeq_place(AeqCtx *c, int v, int cls) nogil:
    """Union v with its neighbors in class cls; -1 if a cycle closes."""
    cdef int mark = c.trail_len
    cdef u64 mask = c.rows[v] & c.class_mask[cls]
    cdef int u, ru, rv, t
    while mask:
        u = eq_ctz64(mask)
        mask &= mask - 1
        ru = _aeq_find(c, u)
        rv = _aeq_find(c, v)
        if ru == rv:
            _aeq_undo(c, mark)
            return -1
        if c.size[ru] < c.size[rv]:
            t = ru
            ru = rv
            rv = t
        c.parent[rv] = ru
        c.size[ru] += c.size[rv]
        c.trail_a[c.trail_len] = rv
        c.trail_b[c.trail_len] = ru
        c.trail_len += 1
    return mark


cdef bint _aeq_bt(AeqCtx *c, int v) nogil:
    if v == c.n:
        return 1
    cdef bint tried_hi = 0
    cdef bint tried_lo = 0
    cdef int cls, mark
    for cls in range(c.k):
        if c.count[cls] == c.quota[cls]:
            continue
        if c.count[cls] == 0:
            if c.quota[cls] == c.hi_quota:
                if tried_hi:
                    continue
                tried_hi = 1
            else:
                if tried_lo:
                    continue
                tried_lo = 1
        mark = _aeq_place(c, v, cls)
        if mark == -1:
            continue
        c.class_mask[cls] |= (<u64>1) << v
        c.count[cls] += 1
        if _aeq_bt(c, v + 1):
            return 1
        c.class_mask[cls] ^= (<u64>1) << v
        c.count[cls] -= 1
        _aeq_undo(c, mark)
    return 0


def a_eq_exists(int n, rows, int k):
    """Class bitmasks of an equitable k-tree-coloring, or None.

    The compiled path handles n <= 63 (one word per class); larger orders
    delegate to the pure kernel, whose bitsets are unbounded.
    """
    if n > 63:
        from . import _kernel_py
        return _kernel_py.a_eq_exists(n, rows, k)
    cdef AeqCtx c
    cdef int q = n // k
    cdef int r = n % k
    cdef int i
    c.n = n
    c.k = k
    c.hi_quota = q + 1
    c.rows = <u64*>_xmalloc(<size_t>n * sizeof(u64))
    c.class_mask = <u64*>_xmalloc(<size_t>k * sizeof(u64))
    c.count = <int*>_xmalloc(2 * <size_t>k * sizeof(int))
    c.quota = c.count + k
    c.parent = <int*>_xmalloc(4 * <size_t>n * sizeof(int))
    c.size = c.parent + n
    c.trail_a = c.parent + 2 * n
    c.trail_b = c.parent + 3 * n
    c.trail_len = 0
    try:
        for i in range(n):
            c.rows[i] = <u64>rows[i]
            c.parent[i] = i
            c.size[i] = 1
        for i in range(k):
            c.class_mask[i] = 0
            c.count[i] = 0
            c.quota[i] = q + 1 if i < r else q
        if _aeq_bt(&c, 0):
            return [c.class_mask[i] for i in range(k)]
        return None
    finally:
        free(c.rows)
        free(c.class_mask)
        free(c.count)
        free(c.parent)
