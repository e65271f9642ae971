"""Topological events: connectivity, isolated structures, edge degrees,
common neighbours, and the nerve-based simple-connectivity certificate.

Edge-case conventions (fixed here, tested explicitly): the empty complex has
zero components and is not connected; a single vertex is connected.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import numpy as np

from .complexes import SimplicialComplex, Simplex

__all__ = [
    "Verdict",
    "FailedCondition",
    "Certificate",
    "RegimePoint",
    "RegimeLabel",
    "connected_components",
    "is_connected",
    "isolated_vertices",
    "is_isolated_subcomplex",
    "min_edge_degree",
    "common_neighbour_exists",
    "all_k_tuples_have_common_neighbour",
    "pairwise_link_intersections_connected",
    "certify_simply_connected",
    "verify_nerve_cover_hypotheses",
    "NerveCheck",
    "regime_classify",
    "dimension",
]

# Above this ground-set size the certificate falls back to the pure-Python
# path: the compiled checks key on an (n+1)^3 boolean tensor.
_FAST_PATH_MAX_N = 700


class Verdict(str, Enum):
    CERTIFIED = "Certified"
    UNKNOWN = "Unknown"


class FailedCondition(str, Enum):
    CONNECTIVITY = "Connectivity"
    EDGE_DEGREE = "EdgeDegree"
    LINK_INTERSECTIONS = "LinkIntersections"
    COMMON_NEIGHBOUR = "CommonNeighbour"


@dataclass(frozen=True)
class Certificate:
    """Outcome of the sufficient simple-connectivity test.  ``Certified``
    implies simply connected; ``Unknown`` makes no claim either way."""

    verdict: Verdict
    failed_condition: FailedCondition | None = None
    witness: tuple[int, ...] | None = None

    def __post_init__(self):
        if (self.verdict is Verdict.CERTIFIED) != (self.failed_condition is None):
            raise ValueError("Certified exactly when no condition failed")


@dataclass(frozen=True)
class RegimePoint:
    """Exponents alpha_i of the scaling p_i = n**(-alpha_i)."""

    alpha: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(float(a) for a in self.alpha))
        if len(self.alpha) < 3:
            raise ValueError("need exponents for dimensions 0, 1 and 2")
        if any(a < 0 for a in self.alpha):
            raise ValueError("exponents must be nonnegative")


class RegimeLabel(str, Enum):
    CONNECTED = "Connected"
    DISCONNECTED = "Disconnected"
    SIMPLY_CONNECTED = "SimplyConnected"
    BOUNDARY = "Boundary"


# -- connectivity ------------------------------------------------------------


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        parent = self.parent
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def connected_components(Y: SimplicialComplex) -> list[tuple[int, ...]]:
    """Components of the 1-skeleton, each as a sorted vertex tuple; the empty
    complex has no components."""
    verts = Y.vertices()
    uf = _UnionFind(verts)
    for a, b in Y.face_array(1).tolist():
        uf.union(a, b)
    groups: dict[int, list[int]] = {}
    for v in verts:
        groups.setdefault(uf.find(v), []).append(v)
    return sorted(tuple(sorted(g)) for g in groups.values())


def is_connected(Y: SimplicialComplex) -> bool:
    """Exactly one component.  A single vertex is connected; the empty
    complex is not."""
    return len(connected_components(Y)) == 1


def isolated_vertices(Y: SimplicialComplex) -> list[int]:
    """Vertices with no incident edge."""
    touched: set[int] = set()
    edges = Y.face_array(1)
    if edges.shape[0]:
        touched.update(np.unique(edges).tolist())
    return [v for v in Y.vertices() if v not in touched]


def is_isolated_subcomplex(Y: SimplicialComplex, S: SimplicialComplex) -> bool:
    """True iff S sits in Y with no edge of Y joining a vertex of S to a
    vertex outside S, i.e. V(S) is a union of component vertex sets."""
    if not S.faces_set <= Y.faces_set:
        raise ValueError("S is not a subcomplex of Y")
    inside = set(S.vertices())
    for a, b in Y.face_array(1).tolist():
        if (a in inside) != (b in inside):
            return False
    return True


# -- degrees and neighbours ----------------------------------------------


def _edge_completer_counts(Y: SimplicialComplex) -> dict[Simplex, int]:
    counts: dict[Simplex, int] = {tuple(e): 0 for e in Y.face_array(1).tolist()}
    for a, b, c in Y.face_array(2).tolist():
        counts[(a, b)] += 1
        counts[(a, c)] += 1
        counts[(b, c)] += 1
    return counts


def min_edge_degree(Y: SimplicialComplex) -> int | None:
    """Minimum number of filled 2-faces over an edge; None without edges."""
    counts = _edge_completer_counts(Y)
    if not counts:
        return None
    return min(counts.values())


def _find_degree_zero_edge(Y: SimplicialComplex) -> Simplex | None:
    for edge, c in _edge_completer_counts(Y).items():
        if c == 0:
            return edge
    return None


def _neighbor_sets(Y: SimplicialComplex) -> dict[int, set[int]]:
    nbrs: dict[int, set[int]] = {v: set() for v in Y.vertices()}
    for a, b in Y.face_array(1).tolist():
        nbrs[a].add(b)
        nbrs[b].add(a)
    return nbrs


def common_neighbour_exists(Y: SimplicialComplex, vertices: tuple[int, ...]) -> bool:
    """Some vertex outside ``vertices`` has an edge to every one of them."""
    vs = tuple(int(v) for v in vertices)
    if len(set(vs)) != len(vs):
        raise ValueError("vertices must be pairwise distinct")
    present = set(Y.vertices())
    if not set(vs) <= present:
        raise ValueError("all queried vertices must be present in the complex")
    nbrs = _neighbor_sets(Y)
    common = set.intersection(*(nbrs[v] for v in vs))
    return bool(common - set(vs))


def _find_tuple_without_common_neighbour(
    Y: SimplicialComplex, k: int
) -> tuple[int, ...] | None:
    nbrs = _neighbor_sets(Y)
    for vs in combinations(Y.vertices(), k):
        common = set.intersection(*(nbrs[v] for v in vs))
        if not common - set(vs):
            return vs
    return None


def all_k_tuples_have_common_neighbour(Y: SimplicialComplex, k: int) -> bool:
    """Every k-subset of V(Y) has a common neighbour; short-circuits."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if Y.num_faces(0) < k:
        return True
    return _find_tuple_without_common_neighbour(Y, k) is None


# -- link and star intersections (definitional, pure Python) ---------------


def _link_faces_raw(Y: SimplicialComplex, v: int) -> set[Simplex]:
    faces = Y.faces_set
    out = set()
    for tau in faces:
        if v not in tau and tuple(sorted(tau + (v,))) in faces:
            out.add(tau)
    return out


def _one_skeleton_connected(face_set: set[Simplex]) -> bool:
    verts = [f[0] for f in face_set if len(f) == 1]
    if not verts:
        return False
    uf = _UnionFind(verts)
    for f in face_set:
        if len(f) == 2:
            uf.union(f[0], f[1])
    return len({uf.find(v) for v in verts}) == 1


def _find_bad_link_pair_generic(Y: SimplicialComplex) -> tuple[int, int] | None:
    link_cache = {v: _link_faces_raw(Y, v) for v in Y.vertices()}
    for i, j in combinations(Y.vertices(), 2):
        if not _one_skeleton_connected(link_cache[i] & link_cache[j]):
            return (i, j)
    return None


def pairwise_link_intersections_connected(Y: SimplicialComplex) -> bool:
    """For every vertex pair, the intersection of their links (taken on the
    common ground set, before compaction) is nonempty and connected."""
    return _find_bad_link_pair_generic(Y) is None


def _star_faces_raw(Y: SimplicialComplex, v: int) -> set[Simplex]:
    faces = Y.faces_set
    return {tau for tau in faces if tuple(sorted(set(tau) | {v})) in faces}


def _find_bad_star_pair_generic(Y: SimplicialComplex) -> tuple[int, int] | None:
    star_cache = {v: _star_faces_raw(Y, v) for v in Y.vertices()}
    for i, j in combinations(Y.vertices(), 2):
        if not _one_skeleton_connected(star_cache[i] & star_cache[j]):
            return (i, j)
    return None


def _find_incomplete_nerve_simplex_generic(
    Y: SimplicialComplex,
) -> tuple[int, ...] | None:
    star_verts = {
        v: {f[0] for f in _star_faces_raw(Y, v) if len(f) == 1} for v in Y.vertices()
    }
    for size in (2, 3):
        for vs in combinations(Y.vertices(), size):
            if not set.intersection(*(star_verts[v] for v in vs)):
                return vs
    return None


# -- fast-path helpers -------------------------------------------------------


def _fast_arrays(Y: SimplicialComplex):
    from . import _kernels

    verts = Y.face_array(0)[:, 0]
    adj = _kernels.adjacency_matrix(Y.n, Y.face_array(1))
    tri = _kernels.triangle_tensor(Y.n, Y.face_array(2))
    return verts, adj, tri


def _use_fast_path(Y: SimplicialComplex) -> bool:
    return Y.n <= _FAST_PATH_MAX_N


# -- the certificate ---------------------------------------------------------


def certify_simply_connected(Y: SimplicialComplex) -> Certificate:
    """Sufficient certificate for simple connectivity.

    Certified iff Y is connected, every edge has degree >= 1, every pair of
    vertices has a connected nonempty link intersection, and every 3 vertices
    share a neighbour.  Conditions are checked in cost order and the first
    failure is reported with a witness; the certificate never claims "not
    simply connected".
    """
    comps = connected_components(Y)
    if len(comps) != 1:
        witness = (comps[0][0], comps[1][0]) if len(comps) > 1 else None
        return Certificate(Verdict.UNKNOWN, FailedCondition.CONNECTIVITY, witness)

    if _use_fast_path(Y):
        from . import _kernels

        verts, adj, tri = _fast_arrays(Y)
        edges = Y.face_array(1)
        if edges.shape[0]:
            filled = tri[edges[:, 0], edges[:, 1]].any(axis=1)
            if not filled.all():
                bad = edges[int(np.argmin(filled))]
                return Certificate(
                    Verdict.UNKNOWN, FailedCondition.EDGE_DEGREE, (int(bad[0]), int(bad[1]))
                )
        i, j = _kernels.find_disconnected_link_pair(verts, adj, tri)
        if i >= 0:
            return Certificate(
                Verdict.UNKNOWN, FailedCondition.LINK_INTERSECTIONS, (int(i), int(j))
            )
        masks = _kernels.pack_neighbor_masks(adj)
        kind, a, b, c = _kernels.find_empty_triple(verts, masks)
        if kind and Y.num_faces(0) >= 3:
            if kind == 1:
                third = next(v for v in Y.vertices() if v not in (a, b))
                witness: tuple[int, ...] = tuple(sorted((int(a), int(b), third)))
            else:
                witness = (int(a), int(b), int(c))
            return Certificate(Verdict.UNKNOWN, FailedCondition.COMMON_NEIGHBOUR, witness)
    else:
        bad_edge = _find_degree_zero_edge(Y)
        if bad_edge is not None:
            return Certificate(Verdict.UNKNOWN, FailedCondition.EDGE_DEGREE, bad_edge)
        pair = _find_bad_link_pair_generic(Y)
        if pair is not None:
            return Certificate(Verdict.UNKNOWN, FailedCondition.LINK_INTERSECTIONS, pair)
        triple = _find_tuple_without_common_neighbour(Y, 3) if Y.num_faces(0) >= 3 else None
        if triple is not None:
            return Certificate(Verdict.UNKNOWN, FailedCondition.COMMON_NEIGHBOUR, triple)
    return Certificate(Verdict.CERTIFIED)


@dataclass(frozen=True)
class NerveCheck:
    """Independent re-verification of the nerve-cover hypotheses behind a
    Certified verdict: every pairwise star intersection is connected and the
    nerve of the vertex-star cover has a complete 2-skeleton."""

    ok: bool
    failure: str | None = None
    witness: tuple[int, ...] | None = None


def verify_nerve_cover_hypotheses(Y: SimplicialComplex) -> NerveCheck:
    if _use_fast_path(Y):
        from . import _kernels

        verts, adj, tri = _fast_arrays(Y)
        i, j = _kernels.find_disconnected_star_pair(verts, adj, tri)
        if i >= 0:
            return NerveCheck(False, "star_intersection_disconnected", (int(i), int(j)))
        closed = _kernels.pack_neighbor_masks(adj, closed=verts)
        kind, a, b, c = _kernels.find_empty_triple(verts, closed)
        if kind:
            witness = (int(a), int(b)) if kind == 1 else (int(a), int(b), int(c))
            return NerveCheck(False, "nerve_two_skeleton_incomplete", witness)
        return NerveCheck(True)

    pair = _find_bad_star_pair_generic(Y)
    if pair is not None:
        return NerveCheck(False, "star_intersection_disconnected", pair)
    missing = _find_incomplete_nerve_simplex_generic(Y)
    if missing is not None:
        return NerveCheck(False, "nerve_two_skeleton_incomplete", missing)
    return NerveCheck(True)


# -- regimes -----------------------------------------------------------------


def regime_classify(point: RegimePoint) -> RegimeLabel:
    """Classify exponents: simply connected when a0 + 3a1 + 2a2 < 1,
    connected when a0 + a1 < 1, disconnected when a0 + a1 > 1, boundary on
    equality."""
    a0, a1, a2 = point.alpha[0], point.alpha[1], point.alpha[2]
    simple = a0 + 3 * a1 + 2 * a2
    connect = a0 + a1
    if simple < 1.0:
        assert connect < 1.0
        return RegimeLabel.SIMPLY_CONNECTED
    if connect < 1.0:
        return RegimeLabel.CONNECTED
    if connect > 1.0:
        return RegimeLabel.DISCONNECTED
    return RegimeLabel.BOUNDARY


def dimension(Y: SimplicialComplex) -> int | None:
    """Maximum face dimension; None for the empty complex."""
    return Y.dim()
