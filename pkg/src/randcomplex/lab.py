"""Verification lab: exhaustive enumeration for tiny spaces, exact pushforward
distributions, Monte Carlo estimation with confidence intervals, chi-square
tests, identity checks, and phase-diagram sweeps.
"""

from __future__ import annotations

import csv
import io
import math
import os
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np
from scipy import stats as sps

from . import topology
from .complexes import (
    Simplex,
    SimplicialComplex,
    build_complex,
    external_faces,
    simplex,
)
from .laws import link_parameters, links_intersection_parameters
from .measure import (
    ParameterVector,
    containment_probability,
    measure,
    reconstruct_from_containment,
    sandwich_probability,
    vertex_count_pmf,
)
from .sampling import SampleConfig, derive_seed, sample_stream
from .topology import (
    Verdict,
    certify_simply_connected,
    dimension,
    is_connected,
    isolated_vertices,
    regime_classify,
    RegimePoint,
    verify_nerve_cover_hypotheses,
)

__all__ = [
    "EnumerationGuardError",
    "CertificateSoundnessError",
    "ExactDistribution",
    "ExperimentReport",
    "IdentityReport",
    "SweepGrid",
    "LinkOfSimplex",
    "IntersectLinks",
    "IntersectWith",
    "DropVertex",
    "default_guard",
    "enumerate_space",
    "enumerate_distribution",
    "exact_pushforward",
    "monte_carlo",
    "degree_observations",
    "chi_square_gof",
    "chi_square_test",
    "wilson_interval",
    "sweep",
    "sweep_csv",
    "verify_identities",
    "check_complex",
    "METRICS",
    "CERTIFICATE_AUDIT",
    "reset_certificate_audit",
]

GUARD_ENV_VAR = "RANDCOMPLEX_GUARD"
_DEFAULT_GUARD = 10**7
_Z95 = 1.959963984540054


class EnumerationGuardError(RuntimeError):
    """The sample space is larger than the enumeration guard allows."""


class CertificateSoundnessError(RuntimeError):
    """A Certified complex failed the independent nerve-hypothesis recheck."""


def default_guard() -> int:
    value = os.environ.get(GUARD_ENV_VAR)
    return int(value) if value else _DEFAULT_GUARD


# -- exhaustive enumeration ----------------------------------------------


def _guard_precheck(n: int, r: int, guard: int) -> None:
    # cheap lower bound on |Omega_n^r| before any work happens
    log2_guard = math.log2(guard)
    if r == 0:
        if n > log2_guard:
            raise EnumerationGuardError(
                f"space (n={n}, r={r}) holds 2^{n} complexes, over the guard {guard}"
            )
        return
    for t in range(n + 1):
        size_log2 = math.log2(math.comb(n, t)) + math.comb(t, 2)
        if size_log2 > log2_guard:
            raise EnumerationGuardError(
                f"space (n={n}, r={r}) exceeds the guard {guard}"
            )


def _layer_candidates(vertices: tuple[int, ...], prev: list[Simplex], dim: int) -> list[Simplex]:
    if dim == 1:
        return list(combinations(vertices, 2))
    prev_set = set(prev)
    out = []
    for sig in prev:
        top = sig[-1]
        for w in vertices:
            if w <= top:
                continue
            if all(sig[:i] + sig[i + 1 :] + (w,) in prev_set for i in range(len(sig))):
                out.append(sig + (w,))
    return out


def enumerate_space(n: int, r: int, guard: int | None = None) -> list[SimplicialComplex]:
    """Every downward-closed subcomplex of the ambient r-skeleton, exactly
    once, in a fixed canonical order (vertex sets by size then lexicographic,
    then a layer-by-layer subset product)."""
    guard = default_guard() if guard is None else guard
    _guard_precheck(n, r, guard)
    out: list[SimplicialComplex] = []

    def extend(vertices: tuple[int, ...], layers: list[list[Simplex]], dim: int) -> None:
        if dim > r:
            faces = [(v,) for v in vertices]
            for layer in layers:
                faces.extend(layer)
            out.append(SimplicialComplex(n, r, faces, validate=False))
            if len(out) > guard:
                raise EnumerationGuardError(
                    f"space (n={n}, r={r}) exceeds the guard {guard}"
                )
            return
        prev = layers[-1] if layers else [(v,) for v in vertices]
        cands = _layer_candidates(vertices, prev, dim)
        for mask in range(1 << len(cands)):
            chosen = [cands[i] for i in range(len(cands)) if mask >> i & 1]
            extend(vertices, layers + [chosen], dim + 1)

    for size in range(n + 1):
        for vertices in combinations(range(1, n + 1), size):
            if r == 0:
                extend(vertices, [], 1)
            else:
                extend(vertices, [], 1 if size else r + 1)
    return out


@dataclass(frozen=True)
class ExactDistribution:
    """Exact law on a fully enumerated space, keyed by canonical complex
    encoding (sorted maximal faces)."""

    n: int
    r: int
    entries: dict[tuple[Simplex, ...], float]
    params: ParameterVector | None = None

    @property
    def total(self) -> float:
        return sum(self.entries.values())

    def prob(self, key: tuple[Simplex, ...]) -> float:
        return self.entries.get(key, 0.0)

    def decode(self, key: tuple[Simplex, ...]) -> SimplicialComplex:
        return build_complex(self.n, self.r, key)


def enumerate_distribution(
    n: int, r: int, params: ParameterVector, guard: int | None = None
) -> ExactDistribution:
    space = enumerate_space(n, r, guard)
    entries = {Y.canonical_key(): measure(Y, params).prob for Y in space}
    dist = ExactDistribution(n=n, r=r, entries=entries, params=params)
    if abs(dist.total - 1.0) > 1e-12:
        raise AssertionError(f"enumerated mass {dist.total} is not 1")
    return dist


# -- exact pushforwards ----------------------------------------------------


@dataclass(frozen=True)
class LinkOfSimplex:
    sigma: Simplex


@dataclass(frozen=True)
class IntersectLinks:
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class IntersectWith:
    params: ParameterVector


@dataclass(frozen=True)
class DropVertex:
    pass


PushforwardMap = LinkOfSimplex | IntersectLinks | IntersectWith | DropVertex


def _conditional_entries(
    dist: ExactDistribution,
    normalizer: float,
    condition: Callable[[SimplicialComplex], bool],
    image: Callable[[SimplicialComplex], SimplicialComplex],
) -> dict[tuple[Simplex, ...], float]:
    if normalizer <= 0.0:
        raise ValueError("conditioning event has probability zero")
    entries: dict[tuple[Simplex, ...], float] = {}
    for key, prob in dist.entries.items():
        if prob == 0.0:
            continue
        Y = dist.decode(key)
        if not condition(Y):
            continue
        target = image(Y).canonical_key()
        entries[target] = entries.get(target, 0.0) + prob / normalizer
    return entries


def exact_pushforward(dist: ExactDistribution, transform: PushforwardMap) -> ExactDistribution:
    """Push an exact distribution through one of the named maps, with the
    exact closed-form normalizer for the conditional (link) cases."""
    from .complexes import link as link_op

    if isinstance(transform, LinkOfSimplex):
        sig = simplex(transform.sigma)
        k = len(sig) - 1
        if dist.params is None:
            raise ValueError("link pushforward needs the source parameters")
        if k >= dist.r:
            raise ValueError(f"link of a {k}-simplex needs r > {k}")
        norm = 1.0
        for i in range(k + 1):
            norm *= dist.params[i] ** math.comb(k + 1, i + 1)
        closure = set(build_complex(dist.n, dist.r, [sig]).faces_set)
        entries = _conditional_entries(
            dist,
            norm,
            lambda Y: closure <= Y.faces_set,
            lambda Y: link_op(Y, sig).complex,
        )
        out = ExactDistribution(dist.n - k - 1, dist.r - k - 1, entries)
    elif isinstance(transform, IntersectLinks):
        centers = tuple(sorted(int(v) for v in transform.vertices))
        k = len(centers)
        if dist.params is None:
            raise ValueError("link pushforward needs the source parameters")
        if not 1 <= k < dist.n:
            raise ValueError("need between 1 and n-1 distinct vertices")
        if len(set(centers)) != k:
            raise ValueError("vertices must be distinct")
        if dist.r < 1:
            raise ValueError("links need r >= 1")
        norm = dist.params[0] ** k
        remaining = [v for v in range(1, dist.n + 1) if v not in centers]
        relabel = {old: new for new, old in enumerate(remaining, start=1)}

        def intersect_links(Y: SimplicialComplex) -> SimplicialComplex:
            faces = Y.faces_set
            raw: set[Simplex] | None = None
            for v in centers:
                lk = {t for t in faces if v not in t and tuple(sorted(t + (v,))) in faces}
                raw = lk if raw is None else raw & lk
            mapped = [tuple(relabel[u] for u in t) for t in raw or ()]
            return SimplicialComplex(dist.n - k, dist.r - 1, mapped, validate=False)

        entries = _conditional_entries(
            dist,
            norm,
            lambda Y: all((v,) in Y.faces_set for v in centers),
            intersect_links,
        )
        out = ExactDistribution(dist.n - k, dist.r - 1, entries)
    elif isinstance(transform, IntersectWith):
        other = enumerate_distribution(dist.n, dist.r, transform.params)
        entries = {}
        pairs = [(dist.decode(k1), p1) for k1, p1 in dist.entries.items() if p1 > 0.0]
        for k2, p2 in other.entries.items():
            if p2 == 0.0:
                continue
            faces2 = other.decode(k2).faces_set
            for Y1, p1 in pairs:
                meet = SimplicialComplex(
                    dist.n, dist.r, Y1.faces_set & faces2, validate=False
                )
                key = meet.canonical_key()
                entries[key] = entries.get(key, 0.0) + p1 * p2
        out = ExactDistribution(dist.n, dist.r, entries)
    elif isinstance(transform, DropVertex):
        entries = {}
        for key, prob in dist.entries.items():
            if prob == 0.0:
                continue
            Y = dist.decode(key)
            kept = [f for f in Y.faces_set if Y.n not in f]
            image = SimplicialComplex(dist.n - 1, dist.r, kept, validate=False)
            tkey = image.canonical_key()
            entries[tkey] = entries.get(tkey, 0.0) + prob
        out = ExactDistribution(dist.n - 1, dist.r, entries)
    else:
        raise TypeError(f"unknown transform {transform!r}")
    if abs(out.total - 1.0) > 1e-9:
        raise AssertionError(f"pushforward mass {out.total} is not 1")
    return out


# -- Monte Carlo -----------------------------------------------------------


@dataclass(frozen=True)
class ExperimentReport:
    """A Monte Carlo estimate (or test p-value) with its 95% interval."""

    metric: str
    estimate: float
    ci_low: float
    ci_high: float
    trials: int
    seed: int
    verdict: str | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not self.ci_low <= self.estimate <= self.ci_high:
            raise ValueError("estimate must lie inside its interval")


def wilson_interval(successes: int, trials: int, z: float = _Z95) -> tuple[float, float]:
    """Wilson score interval for a binomial fraction."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    phat = successes / trials
    denom = 1.0 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = (z / denom) * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials))
    return (max(0.0, center - half), min(1.0, center + half))


CERTIFICATE_AUDIT = {"rechecked": 0, "violations": 0}


def reset_certificate_audit() -> None:
    CERTIFICATE_AUDIT["rechecked"] = 0
    CERTIFICATE_AUDIT["violations"] = 0


def _certified_event(Y: SimplicialComplex) -> bool:
    cert = certify_simply_connected(Y)
    if cert.verdict is not Verdict.CERTIFIED:
        return False
    CERTIFICATE_AUDIT["rechecked"] += 1
    check = verify_nerve_cover_hypotheses(Y)
    if not check.ok:
        CERTIFICATE_AUDIT["violations"] += 1
        raise CertificateSoundnessError(
            f"certified complex fails {check.failure} at {check.witness}"
        )
    return True


def _mean_dimension(Y: SimplicialComplex) -> float:
    d = dimension(Y)
    return float(d) if d is not None else -1.0


def _degree_zero_edges(Y: SimplicialComplex) -> float:
    counts = topology._edge_completer_counts(Y)
    return float(sum(1 for c in counts.values() if c == 0))


METRICS: dict[str, tuple[str, Callable[[SimplicialComplex], float]]] = {
    "connected_fraction": ("event", is_connected),
    "certified_fraction": ("event", _certified_event),
    "isolated_vertex_fraction": ("event", lambda Y: bool(isolated_vertices(Y))),
    "mean_isolated_vertices": ("stat", lambda Y: float(len(isolated_vertices(Y)))),
    "mean_dimension": ("stat", _mean_dimension),
    "mean_f0": ("stat", lambda Y: float(Y.num_faces(0))),
    "mean_f1": ("stat", lambda Y: float(Y.num_faces(1))),
    "mean_f2": ("stat", lambda Y: float(Y.num_faces(2))),
    "mean_degree_zero_edges": ("stat", _degree_zero_edges),
}


def monte_carlo(metric: str, config: SampleConfig) -> ExperimentReport:
    """Estimate a registered metric over config.count trials.  Events get a
    Wilson 95% interval; real statistics get a normal-approximation interval.
    Deterministic given the config seed."""
    try:
        kind, fn = METRICS[metric]
    except KeyError:
        raise ValueError(f"unknown metric {metric!r}; choose from {sorted(METRICS)}") from None
    values = np.fromiter(
        (float(fn(Y)) for Y in sample_stream(config)), dtype=np.float64, count=config.count
    )
    if kind == "event":
        successes = int(values.sum())
        low, high = wilson_interval(successes, config.count)
        est = successes / config.count
        # guard against the interval rounding past the point estimate at 0 or 1
        low, high = min(low, est), max(high, est)
    else:
        est = float(values.mean())
        sd = float(values.std(ddof=1)) if config.count > 1 else 0.0
        half = _Z95 * sd / math.sqrt(config.count)
        low, high = est - half, est + half
    return ExperimentReport(
        metric=metric,
        estimate=est,
        ci_low=low,
        ci_high=high,
        trials=config.count,
        seed=config.seed,
    )


def degree_observations(config: SampleConfig, k: int = 0) -> list[int]:
    """Degree of the lowest-labeled k-simplex (1..k+1), one observation per
    sample containing it.  Observations are independent across samples, which
    a pooled per-vertex histogram would not be."""
    target = tuple(range(1, k + 2))
    out: list[int] = []
    for Y in sample_stream(config):
        if target not in Y.faces_set:
            continue
        cofaces = Y.face_array(k + 1)
        if cofaces.shape[0] == 0:
            out.append(0)
            continue
        mask = np.ones(cofaces.shape[0], dtype=bool)
        for v in target:
            mask &= (cofaces == v).any(axis=1)
        out.append(int(mask.sum()))
    return out


# -- chi-square goodness of fit ---------------------------------------------


def chi_square_gof(
    observed: Mapping,
    expected_probs: Mapping,
    significance: float = 0.01,
    *,
    seed: int = 0,
    min_expected: float = 5.0,
) -> ExperimentReport:
    """Pearson test of observed counts against expected probabilities.  Bins
    with expected count below ``min_expected`` are pooled into a tail bin.
    The report's estimate is the p-value; verdict is pass iff p >= significance.
    """
    unknown = set(observed) - set(expected_probs)
    if unknown:
        raise ValueError(f"observed outcomes outside the expected support: {sorted(unknown)[:3]}")
    trials = sum(observed.values())
    if trials < 1:
        raise ValueError("need at least one observation")
    keys = list(expected_probs)
    exp = np.array([expected_probs[k] * trials for k in keys], dtype=np.float64)
    obs = np.array([observed.get(k, 0) for k in keys], dtype=np.float64)
    big = exp >= min_expected
    if (~big).any():
        exp = np.append(exp[big], exp[~big].sum())
        obs = np.append(obs[big], obs[~big].sum())
        if exp[-1] < min_expected and exp.size > 1:
            # tail still too thin: fold it into the smallest retained bin
            idx = int(np.argmin(exp[:-1]))
            exp[idx] += exp[-1]
            obs[idx] += obs[-1]
            exp, obs = exp[:-1], obs[:-1]
    if exp.size < 2:
        stat, p_value = 0.0, 1.0
    else:
        stat = float(((obs - exp) ** 2 / exp).sum())
        p_value = float(sps.chi2.sf(stat, df=exp.size - 1))
    return ExperimentReport(
        metric="chi_square_p",
        estimate=p_value,
        ci_low=0.0,
        ci_high=1.0,
        trials=int(trials),
        seed=seed,
        verdict="pass" if p_value >= significance else "fail",
    )


def chi_square_test(
    samples: Iterable[SimplicialComplex],
    exact: ExactDistribution,
    significance: float = 0.01,
    *,
    seed: int = 0,
) -> ExperimentReport:
    """Goodness of fit of sampled complexes against an exact distribution,
    binned by complex identity."""
    counts: Counter = Counter()
    for Y in samples:
        if (Y.n, Y.r) != (exact.n, exact.r):
            raise ValueError(
                f"sample space ({Y.n},{Y.r}) does not match ({exact.n},{exact.r})"
            )
        counts[Y.canonical_key()] += 1
    return chi_square_gof(counts, exact.entries, significance, seed=seed)


# -- sweeps ------------------------------------------------------------------


@dataclass(frozen=True)
class SweepGrid:
    """Grid of scaling exponents (p_i = n**-alpha_i) for a Monte Carlo sweep."""

    alpha0: tuple[float, ...]
    alpha1: tuple[float, ...]
    alpha2: tuple[float, ...]
    n: int
    trials: int
    metric: str

    def __post_init__(self):
        if not (self.alpha0 and self.alpha1 and self.alpha2):
            raise ValueError("every exponent axis needs at least one value")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if self.metric != "mean_f_vector" and self.metric not in METRICS:
            raise ValueError(f"unknown metric {self.metric!r}")


CSV_FIELDS = [
    "alpha0",
    "alpha1",
    "alpha2",
    "n",
    "trials",
    "metric",
    "estimate",
    "ci_low",
    "ci_high",
    "regime",
]


def sweep(grid: SweepGrid, seed: int) -> list[dict]:
    """One row per grid cell (row-major over alpha0, alpha1, alpha2), each
    cell sampled with its own seed derived from (seed, cell index) so results
    are identical under any parallel partitioning of cells.  The
    ``mean_f_vector`` metric expands to one row per face dimension."""
    metrics = ["mean_f0", "mean_f1", "mean_f2"] if grid.metric == "mean_f_vector" else [grid.metric]
    rows: list[dict] = []
    cell = 0
    for a0 in grid.alpha0:
        for a1 in grid.alpha1:
            for a2 in grid.alpha2:
                cell_seed = derive_seed(seed, cell)
                cell += 1
                params = ParameterVector(
                    (grid.n ** -a0, grid.n ** -a1, grid.n ** -a2)
                )
                regime = regime_classify(RegimePoint((a0, a1, a2))).value
                for metric in metrics:
                    report = monte_carlo(
                        metric,
                        SampleConfig(
                            n=grid.n, r=2, params=params, seed=cell_seed, count=grid.trials
                        ),
                    )
                    rows.append(
                        {
                            "alpha0": a0,
                            "alpha1": a1,
                            "alpha2": a2,
                            "n": grid.n,
                            "trials": grid.trials,
                            "metric": metric,
                            "estimate": report.estimate,
                            "ci_low": report.ci_low,
                            "ci_high": report.ci_high,
                            "regime": regime,
                        }
                    )
    return rows


def sweep_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


# -- identity suite ----------------------------------------------------------


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one exact-identity check over a parameter grid."""

    name: str
    cases: int
    max_abs_err: float
    tolerance: float
    passed: bool


@dataclass
class _IdentityAccumulator:
    name: str
    tolerance: float
    cases: int = 0
    max_abs_err: float = 0.0

    def add(self, err: float, count: int = 1) -> None:
        self.cases += count
        if err > self.max_abs_err:
            self.max_abs_err = float(err)

    def report(self) -> IdentityReport:
        return IdentityReport(
            name=self.name,
            cases=self.cases,
            max_abs_err=self.max_abs_err,
            tolerance=self.tolerance,
            passed=self.max_abs_err <= self.tolerance,
        )


def _sandwich_admissible(A: SimplicialComplex, B: SimplicialComplex) -> bool:
    a_faces = A.faces_set
    if not a_faces <= B.faces_set:
        return False
    for sig in external_faces(B):
        for i in range(len(sig)):
            facet = sig[:i] + sig[i + 1 :]
            if facet and facet not in a_faces:
                return False
    return True


def verify_identities(
    n: int,
    r: int,
    p_grid: Sequence[ParameterVector],
    guard: int | None = None,
) -> list[IdentityReport]:
    """Cross-check every closed-form law against the enumeration oracle on
    (n, r), for each parameter vector of the grid."""
    space = enumerate_space(n, r, guard)
    m = len(space)
    face_sets = [Y.faces_set for Y in space]
    # SUB[a, y] == True iff space[a] is a subcomplex of space[y]
    sub = np.zeros((m, m), dtype=bool)
    for a in range(m):
        fa = face_sets[a]
        for y in range(m):
            sub[a, y] = fa <= face_sets[y]
    admissible_pairs = [
        (a, b)
        for a in range(m)
        for b in range(m)
        if sub[a, b] and _sandwich_admissible(space[a], space[b])
    ]

    total_mass = _IdentityAccumulator("total_mass", 1e-12)
    containment = _IdentityAccumulator("containment", 1e-12)
    sandwich = _IdentityAccumulator("sandwich", 1e-12)
    characterisation = _IdentityAccumulator("characterisation", 1e-10)
    pf_vertex = _IdentityAccumulator("pushforward_vertex_link", 1e-10)
    pf_edge = _IdentityAccumulator("pushforward_edge_link", 1e-10)
    pf_klinks = _IdentityAccumulator("pushforward_links_intersection", 1e-10)
    pf_product = _IdentityAccumulator("pushforward_intersection", 1e-10)
    pf_drop = _IdentityAccumulator("pushforward_drop_vertex", 1e-10)
    isolated = _IdentityAccumulator("isolated_subcomplex", 1e-12)
    pmf = _IdentityAccumulator("vertex_count_pmf", 1e-12)

    isolated_shapes: list[SimplicialComplex] = []
    if n >= 1:
        isolated_shapes.append(build_complex(n, r, [(1,)]))
    if n >= 2 and r >= 1:
        isolated_shapes.append(build_complex(n, r, [(1, 2)]))
    if n >= 3 and r >= 1:
        isolated_shapes.append(build_complex(n, r, [(1, 2), (2, 3)]))

    for params in p_grid:
        probs = np.array([measure(Y, params).prob for Y in space])
        dist = ExactDistribution(
            n=n, r=r, entries={Y.canonical_key(): float(p) for Y, p in zip(space, probs)},
            params=params,
        )
        total_mass.add(abs(float(probs.sum()) - 1.0))

        contain = sub @ probs  # contain[a] = P(Y >= space[a])
        for a in range(m):
            containment.add(abs(containment_probability(space[a], params).prob - contain[a]))

        for a, b in admissible_pairs:
            enum_sum = float(probs[sub[a] & sub[:, b]].sum())
            sandwich.add(abs(sandwich_probability(space[a], space[b], params).prob - enum_sum))

        for a in range(m):
            A = space[a]
            cmap = {}
            ext = external_faces(A)
            for size in range(len(ext) + 1):
                for chosen in combinations(ext, size):
                    union = SimplicialComplex(
                        n, r, set(A.faces_set) | set(chosen), validate=False
                    )
                    cmap[union.canonical_key()] = containment_probability(union, params).prob
            rebuilt = reconstruct_from_containment(cmap, A)
            characterisation.add(abs(rebuilt - measure(A, params).prob))

        if r >= 1 and params[0] > 0.0:
            target = enumerate_distribution(n - 1, r - 1, link_parameters(params, 0))
            pushed = exact_pushforward(dist, LinkOfSimplex((1,)))
            pf_vertex.add(_dist_distance(pushed, target), count=len(target.entries))
        if r >= 2 and n >= 3 and params[0] > 0.0 and params[1] > 0.0:
            target = enumerate_distribution(n - 2, r - 2, link_parameters(params, 1))
            pushed = exact_pushforward(dist, LinkOfSimplex((1, 2)))
            pf_edge.add(_dist_distance(pushed, target), count=len(target.entries))
        if r >= 1 and n >= 3 and params[0] > 0.0:
            target = enumerate_distribution(n - 2, r - 1, links_intersection_parameters(params, 2))
            pushed = exact_pushforward(dist, IntersectLinks((1, 2)))
            pf_klinks.add(_dist_distance(pushed, target), count=len(target.entries))
        other = ParameterVector(tuple(reversed(params.p)))
        product = ParameterVector(tuple(a * b for a, b in zip(params.p, other.p)))
        target = enumerate_distribution(n, r, product)
        pushed = exact_pushforward(dist, IntersectWith(other))
        pf_product.add(_dist_distance(pushed, target), count=len(target.entries))
        if n >= 2:
            target = enumerate_distribution(n - 1, r, params)
            pushed = exact_pushforward(dist, DropVertex())
            pf_drop.add(_dist_distance(pushed, target), count=len(target.entries))

        for shape in isolated_shapes:
            event_mass = 0.0
            shape_faces = shape.faces_set
            for Y, p in zip(space, probs):
                if shape_faces <= Y.faces_set and topology.is_isolated_subcomplex(Y, shape):
                    event_mass += float(p)
            from .measure import isolated_subcomplex_probability

            formula = isolated_subcomplex_probability(shape, params).prob
            isolated.add(abs(formula - event_mass))

        marginal = np.zeros(n + 1)
        for Y, p in zip(space, probs):
            marginal[Y.num_faces(0)] += p
        pmf_total = 0.0
        for t in range(n + 1):
            value = vertex_count_pmf(t, n, params)
            pmf_total += value
            pmf.add(abs(value - float(marginal[t])))
        pmf.add(abs(pmf_total - 1.0))

    return [
        acc.report()
        for acc in (
            total_mass,
            containment,
            sandwich,
            characterisation,
            pf_vertex,
            pf_edge,
            pf_klinks,
            pf_product,
            pf_drop,
            isolated,
            pmf,
        )
    ]


def _dist_distance(a: ExactDistribution, b: ExactDistribution) -> float:
    keys = set(a.entries) | set(b.entries)
    return max(abs(a.prob(k) - b.prob(k)) for k in keys)


# -- per-complex verdicts (CLI `check`) ---------------------------------------


def check_complex(Y: SimplicialComplex, what: str) -> dict:
    if what == "connected":
        comps = topology.connected_components(Y)
        return {"connected": len(comps) == 1, "components": len(comps)}
    if what == "isolated":
        return {"isolated_vertices": isolated_vertices(Y)}
    if what == "certificate":
        cert = certify_simply_connected(Y)
        return {
            "verdict": cert.verdict.value,
            "failed_condition": cert.failed_condition.value if cert.failed_condition else None,
            "witness": list(cert.witness) if cert.witness else None,
        }
    if what == "dimension":
        return {"dimension": dimension(Y)}
    raise ValueError(f"unknown check {what!r}")
