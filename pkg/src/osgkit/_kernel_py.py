"""Pure-Python reference implementation of the hot enumeration kernels.

Same contract as the compiled module ``osgkit._kernel``: tables travel as
row-major bytes, orders stay small (n <= 5).  This version favours obvious
correctness over speed; the benchmark in benchmarks/bench_kernel.py
compares the two.
"""

from __future__ import annotations

from itertools import permutations

BACKEND = "python"

_UNSET = 0xFF

_PERM_CACHE: dict[int, list[tuple[int, ...]]] = {}


def _perms(n: int) -> list[tuple[int, ...]]:
    if n not in _PERM_CACHE:
        _PERM_CACHE[n] = list(permutations(range(n)))
    return _PERM_CACHE[n]


def find_assoc_violation(mult: bytes, n: int) -> int:
    """Index i*n*n + j*n + k of the least non-associative triple, or -1."""
    for i in range(n):
        for j in range(n):
            ij = mult[i * n + j]
            for k in range(n):
                if mult[ij * n + k] != mult[i * n + mult[j * n + k]]:
                    return (i * n + j) * n + k
    return -1


def _partial_ok(cells, n: int, leq, pos: int) -> bool:
    # cells[pos] was just assigned; everything before pos is known.
    v = cells[pos]
    i, j = divmod(pos, n)

    if leq is not None:
        # cell (i, j) as the product i*j with j varying over comparable columns
        for b in range(n):
            w = cells[i * n + b]
            if w == _UNSET:
                continue
            if leq[j * n + b] and not leq[v * n + w]:
                return False
            if leq[b * n + j] and not leq[w * n + v]:
                return False
        # cell (i, j) as the product i*j with i varying over comparable rows
        for b in range(n):
            w = cells[b * n + j]
            if w == _UNSET:
                continue
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


def _backtrack(n: int, leq: bytes | None) -> list[bytes]:
    total = n * n
    cells = bytearray([_UNSET]) * total
    out: list[bytes] = []

    def fill(pos: int):
        if pos == total:
            out.append(bytes(cells))
            return
        for v in range(n):
            cells[pos] = v
            if _partial_ok(cells, n, leq, pos):
                fill(pos + 1)
        cells[pos] = _UNSET

    fill(0)
    return out


def enumerate_assoc_tables(n: int) -> list[bytes]:
    """All associative tables on n labelled points, lexicographic order."""
    return _backtrack(n, None)


def enumerate_valid_tables(n: int, leq: bytes) -> list[bytes]:
    """All tables that are associative and compatible with the given order."""
    return _backtrack(n, leq)


def canonical_key(mult: bytes, leq: bytes, n: int) -> bytes:
    """Minimum over relabelings of order byte + mult table + leq matrix."""
    best = None
    size = n * n
    cand = bytearray(2 * size)
    for perm in _perms(n):
        for i in range(n):
            pi = perm[i] * n
            row = i * n
            for j in range(n):
                cand[pi + perm[j]] = perm[mult[row + j]]
                cand[size + pi + perm[j]] = leq[row + j]
        enc = bytes(cand)
        if best is None or enc < best:
            best = enc
    return bytes([n]) + best
