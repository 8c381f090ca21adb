# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; contract mirrored by osgkit._kernel_py.

Tables travel as row-major bytes with orders capped at 5, so fixed
stack buffers of 25 cells suffice.
"""

from itertools import permutations

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.string cimport memcpy

BACKEND = "c"

MAX_N = 5

cdef int _UNSET = 0xFF

_PERM_CACHE = {}


def _perm_bytes(int n):
    if n not in _PERM_CACHE:
        _PERM_CACHE[n] = b"".join(bytes(p) for p in permutations(range(n)))
    return _PERM_CACHE[n]


def find_assoc_violation(bytes mult, int n):
    """Index i*n*n + j*n + k of the least non-associative triple, or -1."""
    cdef const unsigned char *m = mult
    cdef int i, j, k, ij
    for i in range(n):
        for j in range(n):
            ij = m[i * n + j]
            for k in range(n):
                if m[ij * n + k] != m[i * n + m[j * n + k]]:
                    return (i * n + j) * n + k
    return -1


cdef bint _partial_ok(unsigned char *cells, int n, const unsigned char *leq,
                      int pos) noexcept:
    cdef int v = cells[pos]
    cdef int i = pos / n
    cdef int j = pos % n
    cdef int a, b, c, ab, bc, left, right, w

    if leq != NULL:
        for b in range(n):
            w = cells[i * n + b]
            if w != _UNSET:
                if leq[j * n + b] and not leq[v * n + w]:
                    return False
                if leq[b * n + j] and not leq[w * n + v]:
                    return False
        for b in range(n):
            w = cells[b * n + j]
            if w != _UNSET:
                if leq[i * n + b] and not leq[v * n + w]:
                    return False
                if leq[b * n + i] and not leq[w * n + v]:
                    return False

    for a in range(n):
        for b in range(n):
            ab = cells[a * n + b]
            if ab == _UNSET:
                continue
            for c in range(n):
                bc = cells[b * n + c]
                if bc == _UNSET:
                    continue
                left = cells[ab * n + c]
                right = cells[a * n + bc]
                if left != _UNSET and right != _UNSET and left != right:
                    return False
    return True


def _backtrack(int n, leq_obj):
    cdef unsigned char cells[25]
    cdef const unsigned char *leq = NULL
    cdef int total = n * n
    cdef int pos, v
    cdef int depth = 0
    if leq_obj is not None:
        leq = <bytes>leq_obj
    out = []

    for pos in range(total):
        cells[pos] = _UNSET

    # iterative depth-first fill in row-major cell order, values ascending
    while depth >= 0:
        pos = depth
        if pos == total:
            out.append(PyBytes_FromStringAndSize(<char *>cells, total))
            depth -= 1
            continue
        v = cells[pos] + 1 if cells[pos] != _UNSET else 0
        while v < n:
            cells[pos] = v
            if _partial_ok(cells, n, leq, pos):
                break
            v += 1
        else:
            cells[pos] = _UNSET
            depth -= 1
            continue
        depth += 1
        if depth < total:
            cells[depth] = _UNSET
    return out


def enumerate_assoc_tables(int n):
    """All associative tables on n labelled points, lexicographic order."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"order must be within 1..{MAX_N}")
    return _backtrack(n, None)


def enumerate_valid_tables(int n, bytes leq):
    """All tables that are associative and compatible with the given order."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"order must be within 1..{MAX_N}")
    if len(leq) != n * n:
        raise ValueError("leq must hold n*n bytes")
    return _backtrack(n, leq)


def canonical_key(bytes mult, bytes leq, int n):
    """Minimum over relabelings of order byte + mult table + leq matrix."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"order must be within 1..{MAX_N}")
    cdef const unsigned char *m = mult
    cdef const unsigned char *q = leq
    cdef bytes perm_blob = _perm_bytes(n)
    cdef const unsigned char *perms = perm_blob
    cdef Py_ssize_t num_perms = len(perm_blob) // n
    cdef unsigned char best[51]
    cdef unsigned char cand[51]
    cdef int size = n * n
    cdef int enc = 2 * size + 1
    cdef Py_ssize_t p
    cdef int i, j, cmp_at
    cdef const unsigned char *perm
    cdef bint have_best = False

    cand[0] = <unsigned char>n
    for p in range(num_perms):
        perm = perms + p * n
        for i in range(n):
            for j in range(n):
                cand[1 + perm[i] * n + perm[j]] = perm[m[i * n + j]]
                cand[1 + size + perm[i] * n + perm[j]] = q[i * n + j]
        if not have_best:
            memcpy(best, cand, enc)
            have_best = True
        else:
            for cmp_at in range(enc):
                if cand[cmp_at] != best[cmp_at]:
                    if cand[cmp_at] < best[cmp_at]:
                        memcpy(best, cand, enc)
                    break
    return PyBytes_FromStringAndSize(<char *>best, enc)
