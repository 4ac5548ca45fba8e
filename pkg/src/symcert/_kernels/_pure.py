"""Pure-Python reference versions of the hot loops.

The compiled module ``_ckernels`` exports the same three functions with the
same signatures; ``symcert._kernels`` picks one at import time.

Monomial encoding used by :func:`nf_reduce` (see ``groebner._Packer``): a
monomial is one int ``K`` that compares like the monomial order and adds like
exponent vectors.  ``low(K)`` recovers the packed exponent fields, each field
``B`` bits wide with its top bit reserved as a guard, so ``b | a`` iff
``((low(a) | guard) - low(b)) & guard == guard``.
"""

from heapq import heapify, heappop, heappush
from math import cos, pi, sin

BACKEND = "python"


class KernelLimit(Exception):
    """A configured ceiling (terms, nodes) was hit inside a kernel."""


def nf_reduce(poly, leads, lead_lows, tails, lowmask, guard, is_lex, max_terms):
    """Fully reduce ``poly`` (dict K -> coeff) modulo a monic basis.

    ``leads[j]`` is the packed leading monomial of basis element j,
    ``lead_lows[j]`` its exponent fields and ``tails[j]`` a list of
    ``(K, coeff)`` for the remaining terms.  Returns the remainder dict.
    """
    acc = dict(poly)
    heap = [-k for k in acc]
    heapify(heap)
    rem = {}
    nlead = len(leads)
    while heap:
        k = -heappop(heap)
        c = acc.pop(k, None)
        if c is None:
            continue
        lg = (k if is_lex else (-k) & lowmask) | guard
        j = 0
        while j < nlead:
            if (lg - lead_lows[j]) & guard == guard:
                break
            j += 1
        else:
            rem[k] = c
            continue
        q = k - leads[j]
        for tk, tc in tails[j]:
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
    """Rank of an integer matrix by fraction-free elimination (rows are copied)."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    nrows = len(a)
    ncols = len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if a[r][col]:
                piv = r
                break
        if piv < 0:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        prow = a[rank]
        for r in range(rank + 1, nrows):
            row = a[r]
            f = row[col]
            for c in range(col + 1, ncols):
                row[c] = (p * row[c] - f * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def vanishing_search(m, n, residues, phi, max_nodes, eps=1e-9):
    """Search multisets of n m-th roots of unity whose sum is zero.

    Multisets are enumerated as non-decreasing exponent sequences starting at
    0 (any vanishing multiset can be rotated to contain 1).  ``residues[e]``
    lists the integer coefficients of x^e mod Phi_m (length ``phi``); a leaf
    vanishes exactly when the summed residue vector is zero.  Subtrees are
    pruned when, for some Galois conjugate zeta^t, the partial sum is farther
    from 0 than the number of roots still to be placed.

    Returns ``(witness or None, nodes)``; raises KernelLimit past max_nodes.
    """
    if n == 0:
        return [], 0
    if m == 1:
        return None, 1
    conj = [t for t in range(1, m // 2 + 1) if _gcd(t, m) == 1]
    nt = len(conj)
    cs = [[cos(2 * pi * ((t * e) % m) / m) for e in range(m)] for t in conj]
    sn = [[sin(2 * pi * ((t * e) % m) / m) for e in range(m)] for t in conj]
    seq = [0] * n
    re = [[0.0] * nt for _ in range(n + 1)]
    im = [[0.0] * nt for _ in range(n + 1)]
    vec = [[0] * phi for _ in range(n + 1)]
    nodes = 0

    # place the mandatory first root (exponent 0)
    for j in range(nt):
        re[1][j] = cs[j][0]
        im[1][j] = sn[j][0]
    vec[1] = list(residues[0])
    starts = [0] * (n + 1)

    def feasible(depth):
        lim = (n - depth + eps) ** 2
        r, i = re[depth], im[depth]
        for j in range(nt):
            if r[j] * r[j] + i[j] * i[j] > lim:
                return False
        return True

    if n == 1:
        return ([0] if not any(vec[1]) else None), 1

    depth = 1
    starts[1] = 0
    # iterative DFS: depth = number of roots placed; next exponent tried at starts[depth]
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
        pr, pi_, pv = re[depth], im[depth], vec[depth]
        nr, ni = re[depth + 1], im[depth + 1]
        for j in range(nt):
            nr[j] = pr[j] + cs[j][e]
            ni[j] = pi_[j] + sn[j][e]
        seq[depth] = e
        if feasible(depth + 1):
            res = residues[e]
            nv = [a + b for a, b in zip(pv, res)]
            vec[depth + 1] = nv
            if depth + 1 == n:
                if not any(nv):
                    return list(seq), nodes
            else:
                depth += 1
                starts[depth] = e
                continue
        starts[depth] = e + 1
    return None, nodes


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
