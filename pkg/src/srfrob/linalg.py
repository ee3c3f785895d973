"""Exact linear algebra over the prime field F_p."""
from __future__ import annotations


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank of an integer matrix reduced mod p, by Gaussian elimination.

    ``rows`` is not modified.
    """
    m = [[a % p for a in r] for r in rows]
    if not m or not m[0]:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], -1, p)
        prow = [a * inv % p for a in m[rank]]
        m[rank] = prow
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], prow)]
        rank += 1
        if rank == len(m):
            break
    return rank
