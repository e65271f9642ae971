"""Closed-form transforms of the retention parameters.

Links of simplexes, intersections of links, intersections of independent
complexes, and one-vertex restriction all stay in the same model family with
transformed parameters.  Transforms are computed through integer exponent
matrices over the input parameters, so iterated compositions stay exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .measure import ParameterVector

__all__ = [
    "DegreeLaw",
    "link_exponent_matrix",
    "link_parameters",
    "links_intersection_parameters",
    "intersection_parameters",
    "restriction_parameters",
    "degree_law",
    "edge_degree_zero_bound",
    "preset",
    "PRESETS",
]


@dataclass(frozen=True)
class DegreeLaw:
    """Binomial law Bi(trials, success) of a simplex degree."""

    trials: int
    success: float

    def __post_init__(self):
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")
        if not 0.0 <= self.success <= 1.0:
            raise ValueError("success probability outside [0, 1]")

    def pmf(self, k: int) -> float:
        if not 0 <= k <= self.trials:
            return 0.0
        p, q = self.success, 1.0 - self.success
        return math.comb(self.trials, k) * p**k * q ** (self.trials - k)

    def mean(self) -> float:
        return self.trials * self.success


def _materialize(params: ParameterVector, exponents: tuple[tuple[int, ...], ...]) -> ParameterVector:
    out = []
    for row in exponents:
        value = 1.0
        for j, e in enumerate(row):
            if e:
                value *= params[j] ** e
        out.append(value)
    return ParameterVector(tuple(out))


def link_exponent_matrix(r: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Exponent of p_j in the i-th link parameter for a k-simplex link:
    p'_i = prod_{j=i}^{i+k+1} p_j ** C(k+1, j-i).  Rows i = 0..r-k-1, columns
    j = 0..r."""
    if not 0 <= k < r:
        raise ValueError(f"simplex dimension k={k} must satisfy 0 <= k < r={r}")
    rows = []
    for i in range(r - k):
        row = [0] * (r + 1)
        for j in range(i, i + k + 2):
            row[j] = math.comb(k + 1, j - i)
        rows.append(tuple(row))
    return tuple(rows)


def link_parameters(params: ParameterVector, k: int) -> ParameterVector:
    """Parameters of the link of a k-dimensional simplex; for k = 0 this is
    p'_i = p_i * p_{i+1}."""
    return _materialize(params, link_exponent_matrix(params.r, k))


def links_intersection_parameters(params: ParameterVector, k: int) -> ParameterVector:
    """Parameters of the intersection of the links of k distinct vertices:
    p'_i = p_i * p_{i+1}**k."""
    if k < 1:
        raise ValueError("need at least one vertex")
    if params.r < 1:
        raise ValueError("links need r >= 1")
    rows = []
    for i in range(params.r):
        row = [0] * (params.r + 1)
        row[i] = 1
        row[i + 1] = k
        rows.append(tuple(row))
    return _materialize(params, tuple(rows))


def intersection_parameters(a: ParameterVector, b: ParameterVector) -> ParameterVector:
    """Componentwise product: the intersection of two independent complexes."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return ParameterVector(tuple(x * y for x, y in zip(a.p, b.p)))


def restriction_parameters(params: ParameterVector) -> ParameterVector:
    """Dropping one vertex of the ground set leaves the law unchanged: the
    restriction to {1..n-1} is the same model with the same parameters."""
    return params


def degree_law(params: ParameterVector, n: int, k: int) -> DegreeLaw:
    """Degree of a k-simplex: Bi(n-k-1, prod_{i=0}^{k+1} p_i ** C(k+1, i));
    for a vertex, Bi(n-1, p_0 p_1)."""
    if k + 1 > params.r:
        raise ValueError(f"degree of a {k}-simplex needs r >= {k + 1}")
    if n < k + 1:
        raise ValueError("ground set too small for the simplex")
    success = 1.0
    for i in range(k + 2):
        success *= params[i] ** math.comb(k + 1, i)
    return DegreeLaw(trials=n - k - 1, success=success)


def edge_degree_zero_bound(params: ParameterVector, n: int) -> float:
    """Expected number of degree-zero edges:
    C(n, 2) p_0^2 p_1 (1 - p_0 p_1^2 p_2)^(n-2)."""
    if params.r < 2:
        raise ValueError("edge degrees need r >= 2")
    p0, p1, p2 = params[0], params[1], params[2]
    return math.comb(n, 2) * p0**2 * p1 * (1.0 - p0 * p1**2 * p2) ** (n - 2)


def _erdos_renyi(p: float) -> ParameterVector:
    return ParameterVector((1.0, p))


def _linial_meshulam(p: float) -> ParameterVector:
    return ParameterVector((1.0, 1.0, p))


def _meshulam_wallach(r: int, p: float) -> ParameterVector:
    if r < 1:
        raise ValueError("need r >= 1")
    return ParameterVector((1.0,) * r + (p,))


def _clique(p: float, r: int) -> ParameterVector:
    if r < 1:
        raise ValueError("need r >= 1")
    return ParameterVector((1.0, p) + (1.0,) * (r - 1))


PRESETS: dict[str, Callable[..., ParameterVector]] = {
    "erdos_renyi": _erdos_renyi,
    "linial_meshulam": _linial_meshulam,
    "meshulam_wallach": _meshulam_wallach,
    "clique": _clique,
}


def preset(name: str) -> Callable[..., ParameterVector]:
    """Factory for a named model: erdos_renyi(p) -> (1, p);
    linial_meshulam(p) -> (1, 1, p); meshulam_wallach(r, p) -> (1,..,1, p);
    clique(p, r) -> (1, p, 1,..,1) materialized to length r+1."""
    try:
        return PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown model {name!r}; choose from {sorted(PRESETS)}") from None
