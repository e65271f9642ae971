"""Simplicial complexes on the labeled ground set {1..n} with dimension cap r.

A complex stores every face explicitly, grouped by dimension as sorted integer
arrays, with a hashed tuple-set view for O(1) membership.  Values are immutable
after construction and safe to share across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple

import numpy as np

Simplex = tuple[int, ...]

__all__ = [
    "Simplex",
    "simplex",
    "boundary",
    "FaceProfile",
    "SimplicialComplex",
    "Link",
    "build_complex",
    "face_profile",
    "external_faces",
    "boundary_complete_simplexes",
    "complement_is_open_star_union",
    "star",
    "link",
    "degree",
    "join_with_simplex",
    "is_subcomplex",
    "is_subcomplex_via_external_faces",
    "all_simplexes",
]


def simplex(vertices: Iterable[int]) -> Simplex:
    """Normalize ``vertices`` to a strictly increasing 1-based tuple."""
    vs = tuple(sorted(int(v) for v in vertices))
    if not vs:
        raise ValueError("a simplex needs at least one vertex")
    if vs[0] < 1:
        raise ValueError(f"vertex labels are 1-based, got {vs[0]}")
    for a, b in zip(vs, vs[1:]):
        if a == b:
            raise ValueError(f"duplicate vertex {a} in simplex")
    return vs


def boundary(sigma: Simplex) -> list[Simplex]:
    """Facets of ``sigma``.  A vertex has empty boundary."""
    if len(sigma) == 1:
        return []
    return [sigma[:i] + sigma[i + 1 :] for i in range(len(sigma))]


def all_simplexes(n: int, r: int) -> Iterator[Simplex]:
    """All simplexes of dimension <= r on {1..n}, dimension-major."""
    for dim in range(r + 1):
        yield from combinations(range(1, n + 1), dim + 1)


def _closure(generators: Iterable[Simplex]) -> set[Simplex]:
    faces: set[Simplex] = set()
    for g in generators:
        for size in range(1, len(g) + 1):
            faces.update(combinations(g, size))
    return faces


@dataclass(frozen=True)
class FaceProfile:
    """Face counts f_0..f_r and external-face counts e_0..e_r."""

    f: tuple[int, ...]
    e: tuple[int, ...]


class Link(NamedTuple):
    """A link over a compacted ground set plus the map back to parent labels.

    ``parent_labels[i]`` is the parent-complex label of compacted vertex i+1.
    """

    complex: "SimplicialComplex"
    parent_labels: tuple[int, ...]


class SimplicialComplex:
    """Immutable downward-closed face family on {1..n}, dimension <= r.

    The empty complex (no faces at all) is a valid value.
    """

    __slots__ = ("n", "r", "_arrays", "_faces", "_hash")

    def __init__(self, n: int, r: int, faces: Iterable[Simplex] = (), *, validate: bool = True):
        if n < 0:
            raise ValueError("ground-set size must be nonnegative")
        if r < 0:
            raise ValueError("dimension cap must be nonnegative")
        self.n = int(n)
        self.r = int(r)
        by_dim: list[set[Simplex]] = [set() for _ in range(self.r + 1)]
        for f in faces:
            f = tuple(f)
            d = len(f) - 1
            if d > self.r:
                raise ValueError(f"face {f} exceeds dimension cap {self.r}")
            by_dim[d].add(f)
        arrays = []
        for d, group in enumerate(by_dim):
            arr = np.array(sorted(group), dtype=np.int64).reshape(len(group), d + 1)
            arrays.append(arr)
        self._arrays = tuple(arrays)
        self._faces: frozenset[Simplex] | None = None
        self._hash: int | None = None
        if validate:
            self._validate()

    @classmethod
    def _from_sorted_arrays(cls, n: int, r: int, arrays: list[np.ndarray]) -> "SimplicialComplex":
        """Internal constructor from per-dimension arrays already in canonical
        (lexicographically sorted, strictly increasing rows) form."""
        obj = cls.__new__(cls)
        obj.n = int(n)
        obj.r = int(r)
        full = list(arrays) + [
            np.empty((0, d + 1), dtype=np.int64) for d in range(len(arrays), r + 1)
        ]
        obj._arrays = tuple(a if a.dtype == np.int64 else a.astype(np.int64) for a in full)
        obj._faces = None
        obj._hash = None
        return obj

    def _validate(self) -> None:
        faces = self.faces_set
        for f in faces:
            if f[0] < 1 or f[-1] > self.n:
                raise ValueError(f"face {f} has labels outside [1, {self.n}]")
            if any(a >= b for a, b in zip(f, f[1:])):
                raise ValueError(f"face {f} is not strictly increasing")
            for facet in boundary(f):
                if facet not in faces:
                    raise ValueError(f"face {f} is missing facet {facet}: not downward closed")

    # -- basic accessors ---------------------------------------------------

    @property
    def faces_set(self) -> frozenset[Simplex]:
        if self._faces is None:
            out: list[Simplex] = []
            for arr in self._arrays:
                out.extend(map(tuple, arr.tolist()))
            self._faces = frozenset(out)
        return self._faces

    def faces(self, dim: int | None = None) -> Iterator[Simplex]:
        """Faces of one dimension, or all faces dimension-major."""
        dims = range(self.r + 1) if dim is None else (dim,)
        for d in dims:
            if 0 <= d <= self.r:
                for row in self._arrays[d].tolist():
                    yield tuple(row)

    def face_array(self, dim: int) -> np.ndarray:
        """(m, dim+1) int64 array of the faces of one dimension, rows sorted."""
        if dim < 0 or dim > self.r:
            return np.empty((0, dim + 1), dtype=np.int64)
        return self._arrays[dim]

    def f_vector(self) -> tuple[int, ...]:
        return tuple(arr.shape[0] for arr in self._arrays)

    def num_faces(self, dim: int) -> int:
        if dim < 0 or dim > self.r:
            return 0
        return self._arrays[dim].shape[0]

    def vertices(self) -> tuple[int, ...]:
        return tuple(self._arrays[0][:, 0].tolist())

    def has_face(self, sigma: Iterable[int]) -> bool:
        return tuple(sigma) in self.faces_set

    def dim(self) -> int | None:
        """Highest face dimension; None for the empty complex."""
        for d in range(self.r, -1, -1):
            if self._arrays[d].shape[0]:
                return d
        return None

    def is_empty(self) -> bool:
        return self._arrays[0].shape[0] == 0

    # -- canonical encoding ------------------------------------------------

    def maximal_faces(self) -> list[Simplex]:
        covered: set[Simplex] = set()
        for d in range(1, self.r + 1):
            for f in self.faces(d):
                covered.update(boundary(f))
        return sorted(f for f in self.faces_set if f not in covered)

    def canonical_key(self) -> tuple[Simplex, ...]:
        """Hashable canonical identity: the sorted tuple of maximal faces."""
        return tuple(self.maximal_faces())

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "maximal_faces": [list(f) for f in self.maximal_faces()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data: dict) -> "SimplicialComplex":
        gens = [simplex(f) for f in data["maximal_faces"]]
        return build_complex(int(data["n"]), int(data["r"]), gens)

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        return cls.from_json_dict(json.loads(text))

    # -- identity ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        if self.n != other.n or self.r != other.r:
            return False
        return all(
            a.shape == b.shape and np.array_equal(a, b)
            for a, b in zip(self._arrays, other._arrays)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.r) + tuple(a.tobytes() for a in self._arrays))
        return self._hash

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, r={self.r}, f={self.f_vector()})"


def build_complex(n: int, r: int, generators: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Downward closure of ``generators`` as a complex on {1..n} capped at r."""
    gens = [simplex(g) for g in generators]
    for g in gens:
        if g[-1] > n:
            raise ValueError(f"generator {g} has a label outside [1, {n}]")
        if len(g) - 1 > r:
            raise ValueError(f"generator {g} has dimension {len(g) - 1} > cap {r}")
    return SimplicialComplex(n, r, _closure(gens), validate=False)


def boundary_complete_simplexes(Y: SimplicialComplex, dim: int) -> Iterator[Simplex]:
    """Simplexes of dimension ``dim`` on {1..Y.n} whose full boundary lies in Y.

    Includes simplexes that are themselves faces of Y.  For dim 0 every label
    qualifies (the boundary of a vertex is the empty set).
    """
    if dim == 0:
        for v in range(1, Y.n + 1):
            yield (v,)
        return
    verts = Y.vertices()
    if dim == 1:
        yield from combinations(verts, 2)
        return
    faces = Y.faces_set
    for sig in Y.faces(dim - 1):
        top = sig[-1]
        for w in verts:
            if w <= top:
                continue
            if all(sig[:i] + sig[i + 1 :] + (w,) in faces for i in range(len(sig))):
                yield sig + (w,)


def external_faces(Y: SimplicialComplex) -> list[Simplex]:
    """External faces of Y up to dimension Y.r: simplexes not in Y whose whole
    boundary is in Y.  Every vertex missing from Y is external."""
    faces = Y.faces_set
    out: list[Simplex] = []
    for dim in range(Y.r + 1):
        out.extend(s for s in boundary_complete_simplexes(Y, dim) if s not in faces)
    return out


def face_profile(Y: SimplicialComplex) -> FaceProfile:
    f = Y.f_vector()
    e = []
    for dim in range(Y.r + 1):
        complete = sum(1 for _ in boundary_complete_simplexes(Y, dim))
        e.append(complete - f[dim])
    return FaceProfile(f=f, e=tuple(e))


def complement_is_open_star_union(Y: SimplicialComplex) -> bool:
    """Structural identity: every simplex of the ambient r-skeleton not in Y
    contains an external face of Y."""
    faces = Y.faces_set
    ext = set(external_faces(Y))
    for sig in all_simplexes(Y.n, Y.r):
        if sig in faces:
            continue
        if not any(
            sub in ext
            for size in range(1, len(sig) + 1)
            for sub in combinations(sig, size)
        ):
            return False
    return True


def _require_face(Y: SimplicialComplex, sig: Simplex) -> None:
    if sig not in Y.faces_set:
        raise ValueError(f"{sig} is not a face of the complex")


def star(Y: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """Faces tau of Y such that V(sigma) union V(tau) spans a face of Y."""
    sig = simplex(sigma)
    _require_face(Y, sig)
    faces = Y.faces_set
    sset = set(sig)
    picked = [tau for tau in faces if tuple(sorted(sset.union(tau))) in faces]
    return SimplicialComplex(Y.n, Y.r, picked, validate=False)


def link(Y: SimplicialComplex, sigma: Iterable[int]) -> Link:
    """Link of ``sigma`` in Y, relabeled onto the compacted ground set
    {1..n-|sigma|} order-preservingly."""
    sig = simplex(sigma)
    _require_face(Y, sig)
    faces = Y.faces_set
    sset = set(sig)
    remaining = [v for v in range(1, Y.n + 1) if v not in sset]
    relabel = {old: new for new, old in enumerate(remaining, start=1)}
    picked = []
    for tau in faces:
        if sset.isdisjoint(tau) and tuple(sorted(sset.union(tau))) in faces:
            picked.append(tuple(relabel[v] for v in tau))
    new_r = max(Y.r - len(sig), 0)
    lk = SimplicialComplex(Y.n - len(sig), new_r, picked, validate=False)
    return Link(complex=lk, parent_labels=tuple(remaining))


def degree(Y: SimplicialComplex, sigma: Iterable[int]) -> int:
    """Number of cofaces of ``sigma`` one dimension higher; equals the vertex
    count of its link."""
    sig = simplex(sigma)
    _require_face(Y, sig)
    faces = Y.faces_set
    sset = set(sig)
    count = 0
    for w in Y.vertices():
        if w not in sset and tuple(sorted(sset.union((w,)))) in faces:
            count += 1
    return count


def join_with_simplex(sigma0: Iterable[int], L: SimplicialComplex) -> SimplicialComplex:
    """Join of the full simplex on ``sigma0`` with L.

    L's ground set is embedded order-preservingly into the labels of
    {1..len(sigma0)+L.n} not used by sigma0, so the vertex sets are disjoint.
    For a single vertex this is the cone over L.
    """
    sig = simplex(sigma0)
    k1 = len(sig)
    n_out = k1 + L.n
    if sig[-1] > n_out:
        raise ValueError(f"simplex labels {sig} do not fit in the joined ground set [1, {n_out}]")
    sset = set(sig)
    remaining = [v for v in range(1, n_out + 1) if v not in sset]
    embed = {old: remaining[old - 1] for old in range(1, L.n + 1)}
    r_out = (k1 - 1) + L.r + 1
    faces: set[Simplex] = set()
    l_faces: list[tuple[int, ...]] = [()]
    l_faces.extend(tuple(embed[v] for v in tau) for tau in L.faces_set)
    for size in range(0, k1 + 1):
        for s_part in combinations(sig, size):
            for t_part in l_faces:
                merged = tuple(sorted(s_part + t_part))
                if merged:
                    faces.add(merged)
    return SimplicialComplex(n_out, r_out, faces, validate=False)


def is_subcomplex(A: SimplicialComplex, B: SimplicialComplex) -> bool:
    """True iff every face of A is a face of B.  Requires matching (n, r)."""
    if (A.n, A.r) != (B.n, B.r):
        raise ValueError(f"mismatched spaces: ({A.n},{A.r}) vs ({B.n},{B.r})")
    return A.faces_set <= B.faces_set


def is_subcomplex_via_external_faces(A: SimplicialComplex, B: SimplicialComplex) -> bool:
    """Equivalent containment test through external faces: A <= B iff every
    external face of B contains a face that is external to A.  Used as an
    independent cross-check of :func:`is_subcomplex`."""
    if (A.n, A.r) != (B.n, B.r):
        raise ValueError(f"mismatched spaces: ({A.n},{A.r}) vs ({B.n},{B.r})")
    ext_a = set(external_faces(A))
    for sig in external_faces(B):
        if not any(
            sub in ext_a
            for size in range(1, len(sig) + 1)
            for sub in combinations(sig, size)
        ):
            return False
    return True
