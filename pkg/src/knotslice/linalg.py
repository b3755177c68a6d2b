"""Exact integer matrix rank for the homology engine.

Strategy: compute the rank modulo two distinct large primes; if they agree
that is the rank over Q (ranks mod p can only undershoot, and only for
finitely many p), otherwise fall back to fraction-free Bareiss elimination.
Matrices arrive as coordinate triples; small ones are densified into numpy
for vectorized elimination, large ones go through a sparse dict-of-rows
pivoting routine.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence, Tuple

import numpy as np

Entry = Tuple[int, int, int]  # (row, col, value)

_PRIMES = (2147483629, 2147483587)
_DENSE_CELL_LIMIT = 4_000_000


def rank(entries: Sequence[Entry], nrows: int, ncols: int) -> int:
    """Rank over the rationals of a matrix given in coordinate form."""
    if nrows == 0 or ncols == 0 or not entries:
        return 0
    r0 = rank_mod_p(entries, nrows, ncols, _PRIMES[0])
    r1 = rank_mod_p(entries, nrows, ncols, _PRIMES[1])
    if r0 == r1:
        return r0
    return rank_exact(entries, nrows, ncols)


def rank_mod_p(entries: Sequence[Entry], nrows: int, ncols: int, p: int) -> int:
    if nrows * ncols <= _DENSE_CELL_LIMIT:
        return _rank_dense_mod_p(entries, nrows, ncols, p)
    return _rank_sparse_mod_p(entries, nrows, ncols, p)


def _rank_dense_mod_p(entries, nrows, ncols, p) -> int:
    A = np.zeros((nrows, ncols), dtype=np.int64)
    for r, c, v in entries:
        A[r, c] = (A[r, c] + v) % p
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = A[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        rows = np.nonzero(A[r + 1 :, c])[0]
        if rows.size:
            block = A[r + 1 :]
            factors = block[rows, c][:, None]
            block[rows] = (block[rows] - factors * A[r]) % p
        r += 1
    return r


def _rank_sparse_mod_p(entries, nrows, ncols, p) -> int:
    rows: list[dict[int, int] | None] = [None] * nrows
    for r, c, v in entries:
        row = rows[r]
        if row is None:
            row = {}
            rows[r] = row
        nv = (row.get(c, 0) + v) % p
        if nv:
            row[c] = nv
        elif c in row:
            del row[c]
    live = [row for row in rows if row]
    col_rows: dict[int, set[int]] = {}
    for idx, row in enumerate(live):
        for c in row:
            col_rows.setdefault(c, set()).add(idx)
    active = set(range(len(live)))
    # lazy min-heap of (row length, row index); stale lengths are re-pushed
    heap = [(len(row), idx) for idx, row in enumerate(live)]
    heapq.heapify(heap)
    rank_ = 0
    while active:
        # pivot on the shortest available row, then its sparsest column
        length, pr = heapq.heappop(heap)
        if pr not in active:
            continue
        row = live[pr]
        if not row:
            active.discard(pr)
            continue
        if len(row) != length:
            heapq.heappush(heap, (len(row), pr))
            continue
        pc = min(row, key=lambda c: len(col_rows.get(c, ())))
        rank_ += 1
        active.discard(pr)
        inv = pow(row[pc], p - 2, p)
        prow = {c: (v * inv) % p for c, v in row.items()}
        targets = [i for i in col_rows.get(pc, ()) if i in active]
        for i in targets:
            orow = live[i]
            f = orow.get(pc)
            if not f:
                continue
            for c, v in prow.items():
                nv = (orow.get(c, 0) - f * v) % p
                if nv:
                    if c not in orow:
                        col_rows.setdefault(c, set()).add(i)
                    orow[c] = nv
                else:
                    if c in orow:
                        del orow[c]
                        col_rows[c].discard(i)
            if not orow:
                active.discard(i)
            else:
                heapq.heappush(heap, (len(orow), i))
        for c in prow:
            col_rows.get(c, set()).discard(pr)
    return rank_


def rank_exact(entries: Sequence[Entry], nrows: int, ncols: int) -> int:
    """Fraction-free Bareiss elimination over Z; exact but dense."""
    A = [[0] * ncols for _ in range(nrows)]
    for r, c, v in entries:
        A[r][c] += v
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, nrows):
            for cc in range(c + 1, ncols):
                A[i][cc] = (A[i][cc] * A[r][c] - A[i][c] * A[r][cc]) // prev
            A[i][c] = 0
        prev = A[r][c]
        r += 1
    return r
