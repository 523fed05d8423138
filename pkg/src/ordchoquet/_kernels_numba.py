"""Loop kernels over bitmask-encoded set families, compiled with numba.

Every function mirrors one in ``_kernels_numpy`` and must return identical
results, including which witness is reported first (lexicographic scan
order over family indices).
"""

import numpy as np

from ._jit import njit


@njit(cache=True)
def closure(rel):
    m = rel.shape[0]
    out = rel.copy()
    for i in range(m):
        out[i, i] = True
    for k in range(m):
        for i in range(m):
            if out[i, k]:
                for j in range(m):
                    if out[k, j]:
                        out[i, j] = True
    return out


@njit(cache=True)
def unit_lower_inverse(z):
    m = z.shape[0]
    inv = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        inv[i, i] = 1
        for j in range(i):
            s = 0
            for k in range(j, i):
                s += z[i, k] * inv[k, j]
            inv[i, j] = -s
    return inv


@njit(cache=True)
def subset_of(masks, x):
    m = masks.shape[0]
    out = np.zeros(m, dtype=np.bool_)
    for i in range(m):
        out[i] = (masks[i] & ~x) == 0
    return out


@njit(cache=True)
def containment_matrix(masks):
    m = masks.shape[0]
    out = np.zeros((m, m), dtype=np.bool_)
    for i in range(m):
        for j in range(m):
            out[i, j] = (masks[i] & ~masks[j]) == 0
    return out


@njit(cache=True)
def maximal_in(masks, x):
    m = masks.shape[0]
    inside = subset_of(masks, x)
    out = inside.copy()
    for i in range(m):
        if not inside[i]:
            continue
        for j in range(m):
            if j != i and inside[j] and (masks[i] & ~masks[j]) == 0:
                out[i] = False
                break
    return out


@njit(cache=True)
def union_witness(masks, intersecting_only):
    m = masks.shape[0]
    srt = np.sort(masks)
    out = np.full(2, -1, dtype=np.int64)
    for i in range(m):
        for j in range(i + 1, m):
            if intersecting_only and (masks[i] & masks[j]) == 0:
                continue
            u = masks[i] | masks[j]
            pos = np.searchsorted(srt, u)
            if pos >= m or srt[pos] != u:
                out[0] = i
                out[1] = j
                return out
    return out


@njit(cache=True)
def consecutive_witness(masks, leq):
    m = masks.shape[0]
    out = np.full(3, -1, dtype=np.int64)
    for f in range(m):
        for g in range(m):
            if not leq[f, g]:
                continue
            for h in range(m):
                if leq[g, h] and (masks[f] & masks[h] & ~masks[g]) != 0:
                    out[0] = f
                    out[1] = g
                    out[2] = h
                    return out
    return out


@njit(cache=True)
def is0_witness(masks, leq):
    m = masks.shape[0]
    out = np.full(2, -1, dtype=np.int64)
    for f in range(m):
        for g in range(f + 1, m):
            if (masks[f] & masks[g]) == 0:
                continue
            u = masks[f] | masks[g]
            found = False
            for j in range(m):
                if leq[f, j] and leq[g, j] and (masks[j] & ~u) == 0:
                    found = True
                    break
            if not found:
                out[0] = f
                out[1] = g
                return out
    return out


@njit(cache=True)
def is1_witness(masks, leq):
    """First (F, G, H, kind) with G < H in [F) lacking a meet (kind 0) or join (kind 1)."""
    m = masks.shape[0]
    out = np.full(4, -1, dtype=np.int64)
    for f in range(m):
        for g in range(m):
            if not leq[f, g]:
                continue
            for h in range(g + 1, m):
                if not leq[f, h]:
                    continue
                u = masks[g] | masks[h]
                meet = False
                for l in range(m):
                    if (leq[f, l] and leq[l, g] and leq[l, h]
                            and (masks[l] & ~u) == 0):
                        meet = True
                        break
                join = False
                for j in range(m):
                    if leq[g, j] and leq[h, j] and (masks[j] & ~u) == 0:
                        join = True
                        break
                if not (meet and join):
                    out[0] = f
                    out[1] = g
                    out[2] = h
                    out[3] = 0 if not meet else 1
                    return out
    return out


@njit(cache=True)
def co_intersecting(masks):
    m = masks.shape[0]
    out = np.zeros((m, m), dtype=np.bool_)
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(i + 1):
                if (masks[k] & masks[i]) != 0 and (masks[k] & masks[j]) != 0:
                    out[i, j] = True
                    out[j, i] = True
                    break
    return out
