# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels. Same contract as _purecore; see there.

Limits: n <= 62 nodes and peak numerator/denominator small enough that
score cross-products fit in 64 bits. The core module routes oversized
inputs to the pure backend.
"""

from libc.stdlib cimport malloc, free

BACKEND_NAME = "compiled"

cdef extern from *:
    """
    static inline int popcount64(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    """
    int popcount64(unsigned long long x) nogil

ctypedef unsigned long long u64


cdef inline void _score(long long x, long long y, long long lp, long long lq,
                        long long *num, long long *den) nogil:
    if x * lq <= y * lp:
        num[0] = x
        den[0] = y
    else:
        num[0] = lp * (y - x)
        den[0] = (lq - lp) * y


cdef inline bint _score_less(long long x1, long long y1, long long x2, long long y2,
                             long long lp, long long lq) nogil:
    cdef long long n1, d1, n2, d2
    _score(x1, y1, lp, lq, &n1, &d1)
    _score(x2, y2, lp, lq, &n2, &d2)
    return n1 * d2 < n2 * d1


cdef bint _profitable(u64 *closed, int *deg, int n, u64 blue, int u, int v,
                      long long lp, long long lq) nogil:
    cdef u64 ubit = (<u64>1) << u
    cdef u64 vbit = (<u64>1) << v
    cdef u64 full = ((<u64>1) << n) - 1
    cdef u64 newblue, red, newred
    cdef int tmp
    cdef long long xo, xn
    if ((blue & ubit) != 0) == ((blue & vbit) != 0):
        return 0
    if (blue & ubit) == 0:
        tmp = u; u = v; v = tmp
        ubit = (<u64>1) << u
        vbit = (<u64>1) << v
    newblue = blue ^ ubit ^ vbit
    xo = popcount64(closed[u] & blue)
    xn = popcount64(closed[v] & newblue)
    if not _score_less(xo, deg[u] + 1, xn, deg[v] + 1, lp, lq):
        return 0
    red = full ^ blue
    newred = full ^ newblue
    xo = popcount64(closed[v] & red)
    xn = popcount64(closed[u] & newred)
    return _score_less(xo, deg[v] + 1, xn, deg[u] + 1, lp, lq)


cdef int _counterexample(u64 *closed, int *deg, int n, u64 blue,
                         long long lp, long long lq, int *out_u, int *out_v) nogil:
    cdef int u, v
    for u in range(n):
        for v in range(u + 1, n):
            if ((blue >> u) & 1) != ((blue >> v) & 1):
                if _profitable(closed, deg, n, blue, u, v, lp, lq):
                    out_u[0] = u
                    out_v[0] = v
                    return 1
    out_u[0] = -1
    out_v[0] = -1
    return 0


cdef int _doi_c(u64 *closed, int n, u64 blue) nogil:
    cdef u64 full = ((<u64>1) << n) - 1
    cdef u64 red = full ^ blue
    cdef u64 c, same
    cdef int v, seg = 0
    for v in range(n):
        c = closed[v]
        same = (c & blue) if ((blue >> v) & 1) else (c & red)
        if same == c:
            seg += 1
    return n - seg


cdef void _seg_colors_c(u64 *closed, int n, u64 blue, int *sb, int *sr) nogil:
    cdef u64 full = ((<u64>1) << n) - 1
    cdef u64 red = full ^ blue
    cdef u64 c
    cdef int v
    sb[0] = 0
    sr[0] = 0
    for v in range(n):
        c = closed[v]
        if (blue >> v) & 1:
            if (c & blue) == c:
                sb[0] += 1
        elif (c & red) == c:
            sr[0] += 1


cdef int _phi_c(int *eu, int *ev, int m, u64 blue) nogil:
    cdef int i, count = 0
    for i in range(m):
        if ((blue >> eu[i]) & 1) == ((blue >> ev[i]) & 1):
            count += 1
    return count


cdef inline u64 _next_subset(u64 mask) nogil:
    cdef u64 c = mask & (~mask + 1)
    cdef u64 r = mask + c
    return (((r ^ mask) >> 2) / c) | r


cdef struct _Arrays:
    u64 *closed
    int *deg
    int *eu
    int *ev


cdef int _load(object closed, object deg, object edges_u, object edges_v,
               _Arrays *arr) except -1:
    cdef int n = len(closed)
    cdef int m = len(edges_u) if edges_u is not None else 0
    cdef int i
    arr.closed = <u64 *>malloc(n * sizeof(u64))
    arr.deg = <int *>malloc(n * sizeof(int))
    arr.eu = <int *>malloc((m if m else 1) * sizeof(int))
    arr.ev = <int *>malloc((m if m else 1) * sizeof(int))
    for i in range(n):
        arr.closed[i] = closed[i]
        arr.deg[i] = deg[i] if deg is not None else 0
    for i in range(m):
        arr.eu[i] = edges_u[i]
        arr.ev[i] = edges_v[i]
    return 0


cdef void _unload(_Arrays *arr) nogil:
    free(arr.closed)
    free(arr.deg)
    free(arr.eu)
    free(arr.ev)


def swap_profitable(closed, deg, n, blue, u, v, lp, lq):
    cdef _Arrays arr
    _load(closed, deg, None, None, &arr)
    cdef bint res = _profitable(arr.closed, arr.deg, n, <u64>blue, u, v, lp, lq)
    _unload(&arr)
    return bool(res)


def find_counterexample(closed, deg, n, blue, lp, lq):
    cdef _Arrays arr
    cdef int out_u, out_v
    _load(closed, deg, None, None, &arr)
    _counterexample(arr.closed, arr.deg, n, <u64>blue, lp, lq, &out_u, &out_v)
    _unload(&arr)
    return out_u, out_v


def sweep(closed, deg, edges_u, edges_v, n, b, lp, lq):
    cdef _Arrays arr
    _load(closed, deg, edges_u, edges_v, &arr)
    cdef int m = len(edges_u)
    cdef int cn = n, cb = b
    cdef long long clp = lp, clq = lq
    cdef u64 blue = ((<u64>1) << cb) - 1
    cdef u64 limit = (<u64>1) << cn
    cdef long long profiles = 0, se_count = 0, both_seg = 0
    cdef long long min_se_doi = -1, max_se_doi = -1, opt_doi = -1, min_phi = -1
    cdef long long min_se_mask = -1, max_se_mask = -1, opt_mask = -1, min_phi_mask = -1
    cdef int d, phi, cu, cv, sb, sr
    with nogil:
        while blue < limit:
            profiles += 1
            d = _doi_c(arr.closed, cn, blue)
            if d > opt_doi:
                opt_doi = d
                opt_mask = <long long>blue
            phi = _phi_c(arr.eu, arr.ev, m, blue)
            if min_phi < 0 or phi < min_phi:
                min_phi = phi
                min_phi_mask = <long long>blue
            if not _counterexample(arr.closed, arr.deg, cn, blue, clp, clq, &cu, &cv):
                se_count += 1
                if min_se_doi < 0 or d < min_se_doi:
                    min_se_doi = d
                    min_se_mask = <long long>blue
                if d > max_se_doi:
                    max_se_doi = d
                    max_se_mask = <long long>blue
                _seg_colors_c(arr.closed, cn, blue, &sb, &sr)
                if sb > 0 and sr > 0:
                    both_seg += 1
            blue = _next_subset(blue)
    _unload(&arr)
    return (profiles, se_count, int(min_se_doi), int(min_se_mask),
            int(max_se_doi), int(max_se_mask), int(opt_doi), int(opt_mask),
            int(min_phi), int(min_phi_mask), int(both_seg))


def max_doi(closed, edges_u, edges_v, n, b, cap):
    cdef _Arrays arr
    _load(closed, None, edges_u, edges_v, &arr)
    cdef int cn = n, cb = b, ccap = cap
    cdef u64 blue = ((<u64>1) << cb) - 1
    cdef u64 limit = (<u64>1) << cn
    cdef long long best = -1, best_mask = -1, profiles = 0
    cdef int d
    with nogil:
        while blue < limit:
            profiles += 1
            d = _doi_c(arr.closed, cn, blue)
            if d > best:
                best = d
                best_mask = <long long>blue
                if best >= ccap:
                    break
            blue = _next_subset(blue)
    _unload(&arr)
    return int(best), int(best_mask), int(profiles)
