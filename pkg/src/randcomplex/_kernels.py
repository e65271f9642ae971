"""Compiled inner loops for the simple-connectivity certificate.

The checks are quadratic or cubic in the vertex count and run on hundreds of
Monte Carlo samples, so the pair/triple scans are jitted.  Semantically
equivalent pure-Python implementations live in ``topology`` and the test suite
cross-checks the two on enumerated and sampled complexes.
"""

from __future__ import annotations

import numpy as np
from numba import njit

__all__ = [
    "adjacency_matrix",
    "triangle_tensor",
    "pack_neighbor_masks",
    "find_disconnected_link_pair",
    "find_disconnected_star_pair",
    "find_empty_triple",
]


def adjacency_matrix(n: int, edges: np.ndarray) -> np.ndarray:
    """(n+1, n+1) symmetric bool adjacency; row/col 0 unused (1-based labels)."""
    adj = np.zeros((n + 1, n + 1), dtype=np.bool_)
    if edges.shape[0]:
        adj[edges[:, 0], edges[:, 1]] = True
        adj[edges[:, 1], edges[:, 0]] = True
    return adj


def triangle_tensor(n: int, triangles: np.ndarray) -> np.ndarray:
    """(n+1,)^3 bool tensor, True on every permutation of a filled 2-face."""
    tri = np.zeros((n + 1, n + 1, n + 1), dtype=np.bool_)
    if triangles.shape[0]:
        a, b, c = triangles[:, 0], triangles[:, 1], triangles[:, 2]
        tri[a, b, c] = True
        tri[a, c, b] = True
        tri[b, a, c] = True
        tri[b, c, a] = True
        tri[c, a, b] = True
        tri[c, b, a] = True
    return tri


def pack_neighbor_masks(adj: np.ndarray, closed: np.ndarray | None = None) -> np.ndarray:
    """Pack adjacency rows into uint64 bitmask words; optionally set the
    self-bit for the labels in ``closed`` (closed neighborhoods)."""
    size = adj.shape[0]
    rows = adj.copy()
    if closed is not None and closed.shape[0]:
        rows[closed, closed] = True
    words = (size + 63) // 64
    padded = np.zeros((size, words * 64), dtype=np.bool_)
    padded[:, :size] = rows
    weights = np.left_shift(np.uint64(1), np.arange(64, dtype=np.uint64))
    return (padded.reshape(size, words, 64) * weights).sum(axis=2, dtype=np.uint64)


@njit(cache=True)
def find_disconnected_link_pair(verts, adj, tri):
    """First vertex pair (i, j) whose link intersection is empty or has a
    disconnected 1-skeleton; (-1, -1) when none exists.

    Nodes are the common neighbors of i and j; (u, v) is an edge of the
    intersection iff both (i,u,v) and (j,u,v) are filled 2-faces.
    """
    m = verts.shape[0]
    size = adj.shape[0]
    common = np.empty(size, np.int64)
    queue = np.empty(size, np.int64)
    rem = np.empty(size, np.int64)
    for a in range(m):
        i = verts[a]
        for b in range(a + 1, m):
            j = verts[b]
            cn = 0
            for c in range(m):
                v = verts[c]
                if adj[i, v] and adj[j, v]:
                    common[cn] = v
                    cn += 1
            if cn == 0:
                return i, j
            queue[0] = common[0]
            qn = 1
            rn = cn - 1
            for t in range(rn):
                rem[t] = common[t + 1]
            while qn > 0 and rn > 0:
                qn -= 1
                u = queue[qn]
                t = 0
                while t < rn:
                    v = rem[t]
                    if tri[i, u, v] and tri[j, u, v]:
                        queue[qn] = v
                        qn += 1
                        rn -= 1
                        rem[t] = rem[rn]
                    else:
                        t += 1
            if rn > 0:
                return i, j
    return np.int64(-1), np.int64(-1)


@njit(cache=True, inline="always")
def _star_edge(adj, tri, i, j, u, v):
    # is (u, v) an edge of St(i) & St(j): both unions must span faces.
    # tri is symmetric; keep the scanned vertex v as the last index so the
    # inner BFS walk stays cache-friendly.
    if u != i and u != j and v != i and v != j:
        return tri[i, u, v] and tri[j, u, v]
    if u == i or u == j:
        u, v = v, u
    if v == i:
        return adj[i, u] and (tri[i, j, u] if u != j else adj[i, j])
    return adj[j, u] and (tri[i, j, u] if u != i else adj[i, j])


@njit(cache=True)
def find_disconnected_star_pair(verts, adj, tri):
    """First vertex pair whose star intersection is empty or disconnected,
    evaluated from the star definition; (-1, -1) when none exists."""
    m = verts.shape[0]
    size = adj.shape[0]
    nodes = np.empty(size, np.int64)
    queue = np.empty(size, np.int64)
    rem = np.empty(size, np.int64)
    for a in range(m):
        i = verts[a]
        for b in range(a + 1, m):
            j = verts[b]
            edge_ij = adj[i, j]
            nn = 0
            for c in range(m):
                x = verts[c]
                if x == i or x == j:
                    if edge_ij:
                        nodes[nn] = x
                        nn += 1
                elif adj[x, i] and adj[x, j]:
                    nodes[nn] = x
                    nn += 1
            if nn == 0:
                return i, j
            queue[0] = nodes[0]
            qn = 1
            rn = nn - 1
            for t in range(rn):
                rem[t] = nodes[t + 1]
            while qn > 0 and rn > 0:
                qn -= 1
                u = queue[qn]
                t = 0
                while t < rn:
                    v = rem[t]
                    if _star_edge(adj, tri, i, j, u, v):
                        queue[qn] = v
                        qn += 1
                        rn -= 1
                        rem[t] = rem[rn]
                    else:
                        t += 1
            if rn > 0:
                return i, j
    return np.int64(-1), np.int64(-1)


@njit(cache=True)
def find_empty_triple(verts, masks):
    """First pair or triple of listed vertices whose mask intersection is all
    zero.  Returns (kind, x, y, z): kind 0 = none, 1 = pair (z = -1),
    2 = triple."""
    m = verts.shape[0]
    words = masks.shape[1]
    buf = np.empty(words, np.uint64)
    for a in range(m):
        i = verts[a]
        for b in range(a + 1, m):
            j = verts[b]
            nonzero = False
            for w in range(words):
                buf[w] = masks[i, w] & masks[j, w]
                if buf[w] != np.uint64(0):
                    nonzero = True
            if not nonzero:
                return 1, i, j, np.int64(-1)
            for c in range(b + 1, m):
                k = verts[c]
                hit = False
                for w in range(words):
                    if (buf[w] & masks[k, w]) != np.uint64(0):
                        hit = True
                        break
                if not hit:
                    return 2, i, j, k
    return 0, np.int64(-1), np.int64(-1), np.int64(-1)
