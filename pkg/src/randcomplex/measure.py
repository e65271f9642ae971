"""Exact evaluation of the multi-parameter measure on random complexes.

The measure of a complex Y with parameters p_0..p_r is
prod_i p_i**f_i(Y) * prod_i (1-p_i)**e_i(Y), with the 0**0 = 1 convention.
Everything here works in the log domain: products of tiny factors underflow
linear doubles already around n = 40.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .complexes import Simplex, SimplicialComplex, external_faces, face_profile, is_subcomplex

__all__ = [
    "ParameterVector",
    "LogProbability",
    "SandwichConditionError",
    "measure",
    "containment_probability",
    "sandwich_probability",
    "vertex_count_pmf",
    "isolated_subcomplex_probability",
    "expected_edge_count",
    "reconstruct_from_containment",
]


@dataclass(frozen=True)
class ParameterVector:
    """Retention probabilities p_0..p_r, one per dimension."""

    p: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(float(x) for x in self.p))
        if not self.p:
            raise ValueError("parameter vector must have at least one entry")
        for x in self.p:
            if not 0.0 <= x <= 1.0:
                raise ValueError(f"parameter {x} outside [0, 1]")

    @property
    def r(self) -> int:
        return len(self.p) - 1

    def q(self, i: int) -> float:
        return 1.0 - self.p[i]

    def omega(self, n: int) -> float:
        """Expected vertex count n * p_0."""
        return n * self.p[0]

    def __len__(self) -> int:
        return len(self.p)

    def __getitem__(self, i: int) -> float:
        return self.p[i]


@dataclass(frozen=True)
class LogProbability:
    """A probability held as its natural log; -inf encodes probability 0."""

    value: float

    def __post_init__(self):
        if self.value > 1e-9:
            raise ValueError(f"log-probability {self.value} > 0")

    @property
    def prob(self) -> float:
        return math.exp(self.value)

    @classmethod
    def of(cls, prob: float) -> "LogProbability":
        return cls(math.log(prob) if prob > 0.0 else -math.inf)


class SandwichConditionError(ValueError):
    """The pair (A, B) violates the boundary condition the sandwich formula
    requires; the closed form is false without it."""


def _check_params(Y: SimplicialComplex, params: ParameterVector) -> None:
    if params.r != Y.r:
        raise ValueError(
            f"parameter vector has length {len(params)}, complex needs {Y.r + 1}"
        )


def _log_power(base: float, exponent: int) -> float:
    """exponent * log(base) with the 0**0 = 1 convention (zero exponents
    contribute nothing even when the base is 0)."""
    if exponent == 0:
        return 0.0
    if base == 0.0:
        return -math.inf
    return exponent * math.log(base)


def measure(Y: SimplicialComplex, params: ParameterVector) -> LogProbability:
    """Log-measure of Y: sum_i f_i*log(p_i) + e_i*log(q_i)."""
    _check_params(Y, params)
    profile = face_profile(Y)
    total = 0.0
    for i in range(Y.r + 1):
        total += _log_power(params.p[i], profile.f[i])
        total += _log_power(params.q(i), profile.e[i])
    return LogProbability(total)


def containment_probability(A: SimplicialComplex, params: ParameterVector) -> LogProbability:
    """Log-probability of {Y contains A}: sum_i f_i(A)*log(p_i).  Independent of n."""
    _check_params(A, params)
    f = A.f_vector()
    return LogProbability(sum(_log_power(params.p[i], f[i]) for i in range(A.r + 1)))


def sandwich_probability(
    A: SimplicialComplex, B: SimplicialComplex, params: ParameterVector
) -> LogProbability:
    """Log-probability of {A <= Y <= B}.

    Requires A <= B and that the boundary of every external face of B (of
    dimension <= r) lies in A; the condition is verified, not assumed.
    """
    _check_params(A, params)
    if not is_subcomplex(A, B):
        raise SandwichConditionError("A is not a subcomplex of B")
    a_faces = A.faces_set
    for sig in external_faces(B):
        for v_drop in range(len(sig)):
            facet = sig[:v_drop] + sig[v_drop + 1 :]
            if facet and facet not in a_faces:
                raise SandwichConditionError(
                    f"external face {sig} of B has boundary face {facet} outside A"
                )
    f = A.f_vector()
    e = face_profile(B).e
    total = 0.0
    for i in range(A.r + 1):
        total += _log_power(params.p[i], f[i])
        total += _log_power(params.q(i), e[i])
    return LogProbability(total)


def vertex_count_pmf(t: int, n: int, params: ParameterVector) -> float:
    """P(f_0(Y) = t) = C(n, t) p_0^t q_0^(n-t)."""
    if not 0 <= t <= n:
        raise ValueError(f"vertex count {t} outside [0, {n}]")
    log_binom = math.lgamma(n + 1) - math.lgamma(t + 1) - math.lgamma(n - t + 1)
    log_mass = _log_power(params.p[0], t) + _log_power(params.q(0), n - t)
    if log_mass == -math.inf:
        return 0.0
    return math.exp(log_binom + log_mass)


def isolated_subcomplex_probability(
    S: SimplicialComplex, params: ParameterVector, n: int | None = None
) -> LogProbability:
    """Log-probability that Y contains S with no edge of Y joining a vertex of
    S to a vertex outside S:

        [q_0 + p_0 q_1^{f_0(S)}]^{n - f_0(S)} * prod_i p_i^{f_i(S)}
    """
    _check_params(S, params)
    if n is None:
        n = S.n
    if n < S.n:
        raise ValueError(f"ambient size {n} smaller than the complex ground set {S.n}")
    f = S.f_vector()
    q1 = params.q(1) if S.r >= 1 else 1.0
    base = params.q(0) + params.p[0] * q1 ** f[0]
    total = _log_power(base, n - f[0])
    for i in range(S.r + 1):
        total += _log_power(params.p[i], f[i])
    return LogProbability(min(total, 0.0))


def expected_edge_count(n: int, params: ParameterVector) -> float:
    """Expected number of edges: C(n, 2) p_0^2 p_1."""
    if params.r < 1:
        raise ValueError("edge expectation needs r >= 1")
    return math.comb(n, 2) * params.p[0] ** 2 * params.p[1]


def reconstruct_from_containment(
    containment: Mapping[tuple[Simplex, ...], float], base: SimplicialComplex
) -> float:
    """Recover the point measure of ``base`` from containment probabilities by
    inclusion-exclusion over subsets of its external faces.

    ``containment`` maps canonical keys (see ``SimplicialComplex.canonical_key``)
    of ``base`` and of every union of ``base`` with external faces to the
    probability of {Y contains that complex}.
    """
    from itertools import combinations as combos

    ext = external_faces(base)
    total = 0.0
    base_faces = base.faces_set
    for size in range(len(ext) + 1):
        for chosen in combos(ext, size):
            added = set(base_faces)
            for sig in chosen:
                added.add(sig)
            union = SimplicialComplex(base.n, base.r, added, validate=False)
            key = union.canonical_key()
            if key not in containment:
                raise KeyError(f"containment map is missing an entry for {key}")
            total += (-1) ** size * containment[key]
    return total
