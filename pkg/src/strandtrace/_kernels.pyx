# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Same contracts as ``strandtrace._kernels_py``; the hot loops (coloring
census, restricted-permutation census, proper-coloring count) run on C
arrays.  Results are bit-identical to the fallback.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset


cdef long _factorial(int n):
    cdef long out = 1
    cdef int i
    for i in range(2, n + 1):
        out *= i
    return out


# ---------------------------------------------------------------------------
# colored_census
# ---------------------------------------------------------------------------

cdef struct CensusState:
    int n
    int m                  # number of crossings
    int *lo                # crossing left ends, 1-based
    int *sz                # crossing sizes
    int *comp              # composite permutation, comp[p] = value at position p (1-based)
    int *inv               # inverse of comp
    int *sig               # scratch: current window permutation (offsets)
    int *sig_used          # scratch: used flags per window offset
    int *pos               # scratch: saved positions while applying a window
    long *rank_counts      # direct-address counts by Lehmer rank (small n), or NULL


cdef long _lehmer_rank(int *comp, int n):
    cdef long rank = 0
    cdef int a, b, smaller
    for a in range(n):
        smaller = 0
        for b in range(a + 1, n):
            if comp[b + 1] < comp[a + 1]:
                smaller += 1
        rank = rank * (n - a) + smaller
    return rank


cdef void _record(CensusState *st, dict dict_counts):
    cdef int i
    if st.rank_counts != NULL:
        st.rank_counts[_lehmer_rank(st.comp, st.n)] += 1
    else:
        key = tuple([st.comp[i + 1] for i in range(st.n)])
        dict_counts[key] = dict_counts.get(key, 0) + 1


cdef void _apply_window(CensusState *st, int level, int off):
    """Apply the window permutation in sig (offset by crossing) to comp."""
    cdef int lo = st.lo[level]
    cdef int s = st.sz[level]
    cdef int t, v, p
    for t in range(s):
        st.pos[off + t] = st.inv[lo + t]
    for t in range(s):
        p = st.pos[off + t]
        v = lo + st.sig[off + t]
        st.comp[p] = v
        st.inv[v] = p


cdef void _undo_window(CensusState *st, int level, int off):
    cdef int lo = st.lo[level]
    cdef int s = st.sz[level]
    cdef int t, p
    for t in range(s):
        p = st.pos[off + t]
        st.comp[p] = lo + t
        st.inv[lo + t] = p


cdef void _gen_windows(CensusState *st, dict dict_counts, int level, int off, int depth):
    """Enumerate window permutations of crossing `level` into sig, recursing
    into the next crossing at each complete choice."""
    cdef int s, o
    if depth == st.sz[level]:
        _apply_window(st, level, off)
        if level + 1 == st.m:
            _record(st, dict_counts)
        else:
            _gen_windows(st, dict_counts, level + 1, off + st.sz[level], 0)
        _undo_window(st, level, off)
        return
    s = st.sz[level]
    for o in range(s):
        if not st.sig_used[off + o]:
            st.sig_used[off + o] = 1
            st.sig[off + depth] = o
            _gen_windows(st, dict_counts, level, off, depth + 1)
            st.sig_used[off + o] = 0


def colored_census(int n, crossings):
    """Multiset {image-tuple: count} of composites over all diagram colorings."""
    cdef CensusState st
    cdef int m = len(crossings)
    cdef int k, i, j, total_sz
    cdef long nfact, r
    cdef dict dict_counts = {}

    st.n = n
    st.m = m
    st.rank_counts = NULL

    if m == 0:
        return {tuple(range(1, n + 1)): 1}

    st.lo = <int *> malloc(m * sizeof(int))
    st.sz = <int *> malloc(m * sizeof(int))
    total_sz = 0
    for k in range(m):
        i = crossings[k][0]
        j = crossings[k][1]
        st.lo[k] = i
        st.sz[k] = j - i + 1
        total_sz += j - i + 1

    st.comp = <int *> malloc((n + 2) * sizeof(int))
    st.inv = <int *> malloc((n + 2) * sizeof(int))
    for k in range(1, n + 1):
        st.comp[k] = k
        st.inv[k] = k
    st.sig = <int *> malloc(total_sz * sizeof(int))
    st.sig_used = <int *> malloc(total_sz * sizeof(int))
    st.pos = <int *> malloc(total_sz * sizeof(int))
    memset(st.sig_used, 0, total_sz * sizeof(int))

    use_ranks = n <= 10
    if use_ranks:
        nfact = _factorial(n)
        st.rank_counts = <long *> malloc(nfact * sizeof(long))
        memset(st.rank_counts, 0, nfact * sizeof(long))

    try:
        _gen_windows(&st, dict_counts, 0, 0, 0)
        if use_ranks:
            counts = {}
            for r in range(nfact):
                if st.rank_counts[r]:
                    counts[_unrank(r, n)] = st.rank_counts[r]
            return counts
        return dict_counts
    finally:
        free(st.lo)
        free(st.sz)
        free(st.comp)
        free(st.inv)
        free(st.sig)
        free(st.sig_used)
        free(st.pos)
        if st.rank_counts != NULL:
            free(st.rank_counts)


cdef tuple _unrank(long rank, int n):
    cdef int a, idx, picked, v
    cdef long base
    cdef int *digits = <int *> malloc(n * sizeof(int))
    cdef int *avail = <int *> malloc(n * sizeof(int))
    out = [0] * n
    for a in range(n - 1, -1, -1):
        base = n - a
        digits[a] = rank % base
        rank //= base
    for v in range(n):
        avail[v] = v + 1
    for a in range(n):
        idx = digits[a]
        picked = avail[idx]
        for v in range(idx, n - a - 1):
            avail[v] = avail[v + 1]
        out[a] = picked
    free(digits)
    free(avail)
    return tuple(out)


# ---------------------------------------------------------------------------
# restricted_census
# ---------------------------------------------------------------------------

cdef struct RestrictedState:
    int n
    int *order          # positions, most constrained first (0-based)
    int *bounds         # bounds[k] for 0-based position k
    int *images         # sigma, 1-based values at 0-based positions
    int *used
    int *seen           # scratch for cycle type
    int *mult           # scratch: multiplicity vector of the cycle type
    int *radix          # mixed-radix bases for encoding multiplicity vectors
    long *counts        # direct-address counts per encoded cycle type


cdef void _restricted_descend(RestrictedState *st, int idx):
    cdef int k, v, start, size, cur, i
    cdef long key
    if idx == st.n:
        # cycle type of images as a multiplicity vector, then encode
        for i in range(st.n + 1):
            st.seen[i] = 0
            st.mult[i] = 0
        for start in range(1, st.n + 1):
            if st.seen[start]:
                continue
            size = 0
            cur = start
            while not st.seen[cur]:
                st.seen[cur] = 1
                cur = st.images[cur - 1]
                size += 1
            st.mult[size] += 1
        key = 0
        for i in range(st.n, 0, -1):
            key = key * st.radix[i] + st.mult[i]
        st.counts[key] += 1
        return
    k = st.order[idx]
    for v in range(st.bounds[k] + 1, st.n + 1):
        if not st.used[v]:
            st.used[v] = 1
            st.images[k] = v
            _restricted_descend(st, idx + 1)
            st.used[v] = 0


def restricted_census(int n, bounds):
    """Cycle-type census {descending tuple: count} of sigma with
    sigma(k) > bounds[k-1] for all k."""
    cdef RestrictedState st
    cdef int k, i, v
    cdef long total_radix, key, c
    cdef list pairs

    if len(bounds) != n:
        raise ValueError("need one bound per position")
    for k in range(n):
        if bounds[k] >= n:
            return {}

    st.n = n
    st.bounds = <int *> malloc(n * sizeof(int))
    for k in range(n):
        st.bounds[k] = bounds[k]
    order_py = sorted(range(n), key=lambda q: (-bounds[q], q))
    st.order = <int *> malloc(n * sizeof(int))
    for k in range(n):
        st.order[k] = order_py[k]
    st.images = <int *> malloc(n * sizeof(int))
    st.used = <int *> malloc((n + 2) * sizeof(int))
    memset(st.used, 0, (n + 2) * sizeof(int))
    st.seen = <int *> malloc((n + 2) * sizeof(int))
    st.mult = <int *> malloc((n + 2) * sizeof(int))

    # mixed radix: multiplicity of part i is at most n // i
    st.radix = <int *> malloc((n + 2) * sizeof(int))
    total_radix = 1
    for i in range(1, n + 1):
        st.radix[i] = n // i + 1
        total_radix *= st.radix[i]
    st.counts = <long *> malloc(total_radix * sizeof(long))
    memset(st.counts, 0, total_radix * sizeof(long))

    try:
        _restricted_descend(&st, 0)
        result = {}
        for key in range(total_radix):
            c = st.counts[key]
            if c:
                parts = []
                rem = key
                for i in range(1, n + 1):
                    mult_i = rem % st.radix[i]
                    rem //= st.radix[i]
                    parts.extend([i] * mult_i)
                parts.sort(reverse=True)
                result[tuple(parts)] = c
        return result
    finally:
        free(st.bounds)
        free(st.order)
        free(st.images)
        free(st.used)
        free(st.seen)
        free(st.mult)
        free(st.radix)
        free(st.counts)


# ---------------------------------------------------------------------------
# count_colorings
# ---------------------------------------------------------------------------

cdef long _coloring_descend(int v, int n, int m, int *deg, int *nbr, int nmax,
                            int *colors):
    cdef long total = 0
    cdef int c, t, ok
    if v == n:
        return 1
    for c in range(1, m + 1):
        ok = 1
        for t in range(deg[v]):
            if colors[nbr[v * nmax + t]] == c:
                ok = 0
                break
        if ok:
            colors[v] = c
            total += _coloring_descend(v + 1, n, m, deg, nbr, nmax, colors)
    colors[v] = 0
    return total


def count_colorings(int n, edges, int m):
    """Number of proper colorings of the 1-based edge list with m colors."""
    cdef int a, b, v
    cdef int *deg = <int *> malloc(n * sizeof(int))
    cdef int *colors = <int *> malloc((n + 1) * sizeof(int))
    cdef int *nbr
    cdef long result
    memset(deg, 0, n * sizeof(int))
    memset(colors, 0, (n + 1) * sizeof(int))
    nbr = <int *> malloc(n * n * sizeof(int))
    try:
        for a, b in edges:
            if a > b:
                a, b = b, a
            nbr[(b - 1) * n + deg[b - 1]] = a - 1
            deg[b - 1] += 1
        result = _coloring_descend(0, n, m, deg, nbr, n, colors)
        return result
    finally:
        free(deg)
        free(colors)
        free(nbr)
