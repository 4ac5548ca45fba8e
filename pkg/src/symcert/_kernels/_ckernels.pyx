# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pure.py`` (same signatures)."""

from heapq import heapify, heappop, heappush
from libc.math cimport cos, sin, M_PI
from libc.stdlib cimport malloc, free, calloc

from ._pure import KernelLimit

BACKEND = "cython"


def nf_reduce(dict poly, list leads, list lead_lows, list tails, object lowmask,
              object guard, bint is_lex, Py_ssize_t max_terms):
    cdef dict acc = dict(poly)
    cdef list heap = [-k for k in acc]
    cdef dict rem = {}
    cdef Py_ssize_t nlead = len(leads)
    cdef Py_ssize_t j
    cdef object k, c, lg, q, nk, v, tk, tc
    cdef list tail
    heapify(heap)
    while heap:
        k = -heappop(heap)
        c = acc.pop(k, None)
        if c is None:
            continue
        if is_lex:
            lg = k | guard
        else:
            lg = ((-k) & lowmask) | guard
        j = 0
        while j < nlead:
            if (lg - <object>lead_lows[j]) & guard == guard:
                break
            j += 1
        if j == nlead:
            rem[k] = c
            continue
        q = k - <object>leads[j]
        tail = <list>tails[j]
        for tk, tc in tail:
            nk = tk + q
            v = acc.get(nk)
            if v is None:
                if is_lex and nk & guard:
                    raise OverflowError("exponent overflow during reduction")
                acc[nk] = -c * tc
                heappush(heap, -nk)
            else:
                v = v - c * tc
                if v:
                    acc[nk] = v
                else:
                    del acc[nk]
        if len(acc) > max_terms:
            raise KernelLimit(f"intermediate polynomial exceeded {max_terms} terms")
    return rem


def bareiss_rank(rows):
    cdef list a = [list(src) for src in rows]
    cdef Py_ssize_t nrows, ncols, rank, col, r, piv, cc
    cdef object p, prev, f
    cdef list row, prow
    if not a:
        return 0
    nrows = len(a)
    ncols = len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if (<list>a[r])[col]:
                piv = r
                break
        if piv < 0:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        prow = <list>a[rank]
        p = prow[col]
        for r in range(rank + 1, nrows):
            row = <list>a[r]
            f = row[col]
            if f:
                for cc in range(col + 1, ncols):
                    row[cc] = (p * row[cc] - f * prow[cc]) // prev
            else:
                for cc in range(col + 1, ncols):
                    row[cc] = (p * row[cc]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


cdef inline long _gcd(long a, long b):
    while b:
        a, b = b, a % b
    return a


def vanishing_search(long m, long n, residues, long phi, long long max_nodes,
                     double eps=1e-9):
    if n == 0:
        return [], 0
    if m == 1:
        return None, 1
    cdef long nt = 0
    cdef long t, e, j, d, depth
    for t in range(1, m // 2 + 1):
        if _gcd(t, m) == 1:
            nt += 1
    cdef double *cs = <double *> malloc(nt * m * sizeof(double))
    cdef double *sn = <double *> malloc(nt * m * sizeof(double))
    cdef double *re = <double *> calloc((n + 1) * nt, sizeof(double))
    cdef double *im = <double *> calloc((n + 1) * nt, sizeof(double))
    cdef long *res = <long *> malloc(m * phi * sizeof(long))
    cdef long *vec = <long *> calloc((n + 1) * phi, sizeof(long))
    cdef long *seq = <long *> calloc(n, sizeof(long))
    cdef long *starts = <long *> calloc(n + 1, sizeof(long))
    cdef long long nodes = 0
    cdef double lim, x, y
    cdef bint ok, zero
    cdef double *pr
    cdef double *pim
    cdef double *nr
    cdef double *nim
    cdef long *pv
    cdef long *nv
    try:
        j = 0
        for t in range(1, m // 2 + 1):
            if _gcd(t, m) == 1:
                for e in range(m):
                    cs[j * m + e] = cos(2.0 * M_PI * ((t * e) % m) / m)
                    sn[j * m + e] = sin(2.0 * M_PI * ((t * e) % m) / m)
                j += 1
        for e in range(m):
            row = residues[e]
            for d in range(phi):
                res[e * phi + d] = row[d]
        for j in range(nt):
            re[nt + j] = cs[j * m]
            im[nt + j] = sn[j * m]
        for d in range(phi):
            vec[phi + d] = res[d]
        if n == 1:
            zero = True
            for d in range(phi):
                if vec[phi + d]:
                    zero = False
            return ([0] if zero else None), 1
        depth = 1
        starts[1] = 0
        while depth >= 1:
            e = starts[depth]
            if e >= m:
                depth -= 1
                if depth >= 1:
                    starts[depth] += 1
                continue
            nodes += 1
            if nodes > max_nodes:
                raise KernelLimit(f"enumeration exceeded {max_nodes} nodes")
            pr = re + depth * nt
            pim = im + depth * nt
            nr = re + (depth + 1) * nt
            nim = im + (depth + 1) * nt
            lim = (n - depth - 1) + eps
            lim = lim * lim
            ok = True
            for j in range(nt):
                x = pr[j] + cs[j * m + e]
                y = pim[j] + sn[j * m + e]
                nr[j] = x
                nim[j] = y
                if x * x + y * y > lim:
                    ok = False
                    break
            seq[depth] = e
            if ok:
                pv = vec + depth * phi
                nv = vec + (depth + 1) * phi
                zero = True
                for d in range(phi):
                    nv[d] = pv[d] + res[e * phi + d]
                    if nv[d]:
                        zero = False
                if depth + 1 == n:
                    if zero:
                        return [seq[d] for d in range(n)], nodes
                else:
                    depth += 1
                    starts[depth] = e
                    continue
            starts[depth] = e + 1
        return None, nodes
    finally:
        free(cs); free(sn); free(re); free(im); free(res); free(vec); free(seq); free(starts)
