"""Vectorised numpy versions of the bitmask kernels (no numba required)."""

import numpy as np


def closure(rel):
    out = np.asarray(rel, dtype=bool) | np.eye(rel.shape[0], dtype=bool)
    while True:
        step = out | ((out.astype(np.int64) @ out.astype(np.int64)) > 0)
        if np.array_equal(step, out):
            return out
        out = step


def unit_lower_inverse(z):
    m = z.shape[0]
    inv = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        inv[i, i] = 1
        if i:
            inv[i, :i] = -(z[i, :i] @ inv[:i, :i])
    return inv


def subset_of(masks, x):
    return (masks & ~np.int64(x)) == 0


def containment_matrix(masks):
    return (masks[:, None] & ~masks[None, :]) == 0


def maximal_in(masks, x):
    inside = subset_of(masks, x)
    sub = containment_matrix(masks)
    np.fill_diagonal(sub, False)
    dominated = (sub & inside[None, :]).any(axis=1)
    return inside & ~dominated


def _first_upper_pair(bad):
    idx = np.argwhere(np.triu(bad, k=1))
    if len(idx) == 0:
        return np.full(2, -1, dtype=np.int64)
    return idx[0].astype(np.int64)


def union_witness(masks, intersecting_only):
    unions = masks[:, None] | masks[None, :]
    present = np.isin(unions, masks)
    bad = ~present
    if intersecting_only:
        bad &= (masks[:, None] & masks[None, :]) != 0
    return _first_upper_pair(bad)


def consecutive_witness(masks, leq):
    # bad[f, g, h]: F <= G <= H and F & H not inside G
    spill = (masks[:, None, None] & masks[None, None, :]
             & ~masks[None, :, None]) != 0
    bad = leq[:, :, None] & leq[None, :, :] & spill
    idx = np.argwhere(bad)
    if len(idx) == 0:
        return np.full(3, -1, dtype=np.int64)
    return idx[0].astype(np.int64)


def _join_exists(masks, leq):
    u = masks[:, None] | masks[None, :]
    inside = (masks[None, None, :] & ~u[:, :, None]) == 0
    return (leq[:, None, :] & leq[None, :, :] & inside).any(axis=2)


def is0_witness(masks, leq):
    meets = (masks[:, None] & masks[None, :]) != 0
    bad = meets & ~_join_exists(masks, leq)
    return _first_upper_pair(bad)


def is1_witness(masks, leq):
    """First (F, G, H, kind) with G < H in [F) lacking a meet (kind 0) or join (kind 1)."""
    m = masks.shape[0]
    join = _join_exists(masks, leq)
    u = masks[:, None] | masks[None, :]
    inside = (masks[None, None, :] & ~u[:, :, None]) == 0
    # below[g, h, l]: L <= G and L <= H and L inside G | H
    below = leq.T[:, None, :] & leq.T[None, :, :] & inside
    for f in range(m):
        meet = (below & leq[f][None, None, :]).any(axis=2)
        upper = leq[f]
        pair = upper[:, None] & upper[None, :]
        bad = pair & ~(meet & join)
        g, h = _first_upper_pair(bad)
        if g >= 0:
            kind = 0 if not meet[g, h] else 1
            return np.array([f, g, h, kind], dtype=np.int64)
    return np.full(4, -1, dtype=np.int64)


def co_intersecting(masks):
    m = masks.shape[0]
    meets = (masks[:, None] & masks[None, :]) != 0
    # ok[i, j]: some k <= min(i, j) meets both F_i and F_j
    both = meets[:, :, None] & meets[:, None, :]
    lo = np.minimum(np.arange(m)[:, None], np.arange(m)[None, :])
    ok = (both & (np.arange(m)[:, None, None] <= lo[None, :, :])).any(axis=0)
    np.fill_diagonal(ok, False)
    return ok
