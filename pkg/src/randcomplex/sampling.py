"""Seeded sampler for the layered Bernoulli process.

Vertices are retained independently with probability p_0; for i = 1..r each
i-simplex whose full boundary survived is included independently with
probability p_i.  Every Bernoulli draw comes from a counter-based generator
keyed by (seed, trial, dimension, colex rank of the candidate simplex), so a
trial is a pure function of (seed, index) regardless of evaluation order,
thread count, or which candidates get visited.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .complexes import SimplicialComplex
from .measure import ParameterVector

__all__ = ["SampleConfig", "sample", "sample_stream", "derive_seed"]

_GOLDEN = 0x9E3779B97F4A7C15
_LAYER_GAMMA = 0xD1B54A32D192ED03
_MIX_1 = 0xBF58476D1CE4E5B9
_MIX_2 = 0x94D049BB133111EB
_MASK64 = (1 << 64) - 1


def _mix64(x: int) -> int:
    """SplitMix64 finalizer on a 64-bit integer."""
    x = ((x ^ (x >> 30)) * _MIX_1) & _MASK64
    x = ((x ^ (x >> 27)) * _MIX_2) & _MASK64
    return x ^ (x >> 31)


def _trial_key(seed: int, index: int) -> int:
    base = _mix64((seed + _GOLDEN) & _MASK64)
    return _mix64(base ^ (((index & _MASK64) + 1) * _GOLDEN & _MASK64))


def _layer_key(trial_key: int, dim: int) -> int:
    return _mix64(trial_key ^ ((dim + 1) * _LAYER_GAMMA & _MASK64))


def derive_seed(seed: int, index: int) -> int:
    """A decorrelated child seed for sub-experiment ``index``; pure function
    of its arguments, so work split across workers stays reproducible."""
    return _trial_key(seed, index)


def _uniforms(layer_key: int, ranks: np.ndarray) -> np.ndarray:
    """One double in [0, 1) per candidate rank, independent of call batching.

    Vectorized SplitMix64 finalizer; uint64 wraparound is the intended
    arithmetic, so overflow checks are suppressed.
    """
    with np.errstate(over="ignore"):
        z = np.uint64(layer_key) + (ranks + np.uint64(1)) * np.uint64(_GOLDEN)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX_1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX_2)
        z = z ^ (z >> np.uint64(31))
    return (z >> np.uint64(11)).astype(np.float64) * (2.0 ** -53)


@dataclass(frozen=True)
class SampleConfig:
    """One reproducible sampling experiment."""

    n: int
    r: int
    params: ParameterVector
    seed: int
    count: int = 1

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("ground-set size must be nonnegative")
        if self.r < 0:
            raise ValueError("dimension cap must be nonnegative")
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.params.r != self.r:
            raise ValueError(
                f"parameter vector has length {len(self.params)}, need {self.r + 1}"
            )


def _vertex_layer(n: int, p0: float, key: np.uint64) -> np.ndarray:
    if p0 == 0.0 or n == 0:
        return np.empty(0, dtype=np.int64)
    labels = np.arange(1, n + 1, dtype=np.int64)
    if p0 == 1.0:
        return labels
    u = _uniforms(key, np.arange(n, dtype=np.uint64))
    return labels[u < p0]


def _edge_layer(verts: np.ndarray, p1: float, key: np.uint64) -> np.ndarray:
    k = verts.shape[0]
    if p1 == 0.0 or k < 2:
        return np.empty((0, 2), dtype=np.int64)
    iu, iv = np.triu_indices(k, 1)
    u_lab, v_lab = verts[iu], verts[iv]
    if p1 < 1.0:
        ranks = (u_lab - 1).astype(np.uint64) + (
            ((v_lab - 1) * (v_lab - 2)) // 2
        ).astype(np.uint64)
        keep = _uniforms(key, ranks) < p1
        u_lab, v_lab = u_lab[keep], v_lab[keep]
    return np.column_stack((u_lab, v_lab))


def _triangle_layer(n: int, edges: np.ndarray, p2: float, key: np.uint64) -> np.ndarray:
    if p2 == 0.0 or edges.shape[0] == 0:
        return np.empty((0, 3), dtype=np.int64)
    adj = np.zeros((n + 1, n + 1), dtype=bool)
    adj[edges[:, 0], edges[:, 1]] = True
    adj[edges[:, 1], edges[:, 0]] = True
    cols = np.arange(n + 1, dtype=np.int64)
    blocks = []
    for u in np.unique(edges[:, 0]):
        nbrs = cols[adj[u] & (cols > u)]
        if nbrs.shape[0] < 2:
            continue
        # rows: candidate middle vertices v; columns: completers w with w > v
        cand = adj[nbrs] & adj[u][None, :] & (cols[None, :] > nbrs[:, None])
        vi, w = np.nonzero(cand)
        if vi.shape[0]:
            blocks.append(
                np.column_stack((np.full(vi.shape[0], u, dtype=np.int64), nbrs[vi], w))
            )
    if not blocks:
        return np.empty((0, 3), dtype=np.int64)
    tri = np.concatenate(blocks, axis=0)
    if p2 < 1.0:
        v2 = tri[:, 1].astype(np.uint64)
        v3 = tri[:, 2].astype(np.uint64)
        ranks = (
            (tri[:, 0] - 1).astype(np.uint64)
            + ((v2 - np.uint64(1)) * (v2 - np.uint64(2))) // np.uint64(2)
            + ((v3 - np.uint64(1)) * (v3 - np.uint64(2)) * (v3 - np.uint64(3))) // np.uint64(6)
        )
        tri = tri[_uniforms(key, ranks) < p2]
    return tri


def _higher_layer(
    prev: list[tuple[int, ...]], nbrs: dict[int, set[int]], p: float, dim: int, key: np.uint64
) -> list[tuple[int, ...]]:
    """Candidates one dimension above ``prev`` via common-neighbor extension."""
    if p == 0.0 or not prev:
        return []
    prev_set = set(prev)
    cands: list[tuple[int, ...]] = []
    ranks: list[int] = []
    for sig in prev:
        common = set.intersection(*(nbrs[v] for v in sig))
        for w in sorted(common):
            if w <= sig[-1]:
                continue
            if all(sig[:i] + sig[i + 1 :] + (w,) in prev_set for i in range(len(sig))):
                tau = sig + (w,)
                cands.append(tau)
                ranks.append(sum(math.comb(v - 1, i + 1) for i, v in enumerate(tau)))
    if not cands or p == 1.0:
        return cands
    rank_arr = np.array([rk & _MASK64 for rk in ranks], dtype=np.uint64)
    keep = _uniforms(key, rank_arr) < p
    return [tau for tau, k in zip(cands, keep) if k]


def sample(config: SampleConfig, index: int) -> SimplicialComplex:
    """Draw the complex for trial ``index``; deterministic in (seed, index)."""
    if not 0 <= index < config.count:
        raise ValueError(f"trial index {index} outside [0, {config.count})")
    n, r, p = config.n, config.r, config.params
    trial = _trial_key(config.seed, index)

    verts = _vertex_layer(n, p[0], _layer_key(trial, 0))
    arrays = [verts.reshape(-1, 1)]
    edges = np.empty((0, 2), dtype=np.int64)
    if r >= 1:
        edges = _edge_layer(verts, p[1], _layer_key(trial, 1))
        arrays.append(edges)
    if r >= 2:
        tris = _triangle_layer(n, edges, p[2], _layer_key(trial, 2))
        arrays.append(tris)
        if r >= 3:
            nbrs: dict[int, set[int]] = {int(v): set() for v in verts}
            for a, b in edges.tolist():
                nbrs[a].add(b)
                nbrs[b].add(a)
            prev = [tuple(t) for t in tris.tolist()]
            for dim in range(3, r + 1):
                prev = _higher_layer(prev, nbrs, p[dim], dim, _layer_key(trial, dim))
                arrays.append(np.array(prev, dtype=np.int64).reshape(len(prev), dim + 1))
                if not prev:
                    break
    return SimplicialComplex._from_sorted_arrays(n, r, arrays)


def sample_stream(config: SampleConfig) -> Iterator[SimplicialComplex]:
    """All trials in index order; the multiset of outputs is invariant under
    any partitioning of the index range."""
    for index in range(config.count):
        yield sample(config, index)
