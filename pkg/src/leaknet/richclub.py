"""Rich-club estimators and their normalization against the null ensemble.

The topological estimator at threshold k is the edge density realized among
the nodes whose degree (measured on the full graph) exceeds k:
``2 E / (N (N - 1))``. It is 1 when the top nodes share every possible
connection and approaches 0 when they are poorly connected. The weighted
variant scores the r strongest nodes by the ratio of their internal weight to
the heaviest total the same number of edges could carry anywhere in the
graph.

Dividing the observed value by the ensemble mean gives the normalized
coefficient: values near 1 mean the observed density is what chance produces
under the degree- and weight-preserving null, values above 1 signal a
rich-club effect, values below 1 a lack of correlation among the top nodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ClubTooSmall, InsufficientEdges, TooFewEdges
from .network import UndirectedView
from .nullmodel import EnsembleConfig, NullSample, generate_ensemble


@dataclass(frozen=True)
class RichClubPoint:
    """One threshold of the curve.

    ``k`` is a degree cutoff for the topological estimator and a
    strength-rank cutoff for the weighted variant; ``n_above`` is the club
    size either way. ``rho`` is absent when the ensemble mean is zero.
    ``null_excluded`` counts samples whose club was undefined at this
    threshold (structurally impossible under exact degree preservation, but
    accounted for rather than assumed away).
    """

    k: int
    n_above: int
    phi: float
    phi_null_mean: Optional[float]
    phi_null_sd: Optional[float]
    phi_null_p05: Optional[float]
    phi_null_p95: Optional[float]
    rho: Optional[float]
    null_excluded: int


@dataclass(frozen=True)
class RichClubCurve:
    points: list[RichClubPoint]
    ensemble_config: EnsembleConfig
    weighted_variant: bool


def phi(graph: UndirectedView, k: int) -> float:
    """Edge density among nodes of degree > k, in [0, 1].

    Degrees are measured on the full graph. Raises :class:`ClubTooSmall`
    when fewer than two nodes clear the threshold.
    """
    degrees = graph.degrees()
    club = {c for c, d in degrees.items() if d > k}
    n = len(club)
    if n < 2:
        raise ClubTooSmall(f"degree threshold {k} leaves {n} node(s)")
    internal = sum(1 for u, v, _ in graph.edges() if u in club and v in club)
    return 2.0 * internal / (n * (n - 1))


def top_strength_club(graph: UndirectedView, r: int) -> list[str]:
    """The r strongest nodes, ties broken by ascending code."""
    ranked = sorted(graph.nodes(), key=lambda c: (-graph.strength(c), c))
    return ranked[:r]


def _descending_weight_prefix(graph: UndirectedView) -> list[int]:
    """prefix[e] = total of the e largest edge weights in the graph."""
    weights = sorted((w for _, _, w in graph.edges()), reverse=True)
    prefix = [0]
    for w in weights:
        prefix.append(prefix[-1] + w)
    return prefix


def _weighted_club_ratio(
    graph: UndirectedView,
    club: set[str],
    prefix: list[int],
) -> float:
    """Internal club weight over the heaviest possible total for as many edges."""
    internal_edges = 0
    internal_weight = 0
    for u, v, w in graph.edges():
        if u in club and v in club:
            internal_edges += 1
            internal_weight += w
    if internal_edges == 0:
        raise InsufficientEdges("club has no internal edges")
    return internal_weight / prefix[internal_edges]


def phi_weighted(graph: UndirectedView, r: int) -> float:
    """Weighted prominence of the r strongest nodes, in [0, 1].

    Equals 1 exactly when the club's internal edges are the globally
    heaviest ones (so any uniform-weight graph scores 1 at every feasible
    rank). Invariant under uniform positive scaling of all weights.
    """
    if r < 2:
        raise ClubTooSmall(f"rank threshold must be >= 2, got {r}")
    if r > graph.node_count():
        raise ClubTooSmall(f"rank threshold {r} exceeds the {graph.node_count()} nodes")
    club = set(top_strength_club(graph, r))
    return _weighted_club_ratio(graph, club, _descending_weight_prefix(graph))


def _degree_profile(graph: UndirectedView) -> tuple[list[int], list[int]]:
    """Club size and internal edge count for every threshold, in one pass.

    Returns ``(n_above, e_above)`` indexed by k for k = 0 .. max_degree,
    where ``n_above[k]`` counts nodes of degree > k and ``e_above[k]`` counts
    edges whose both endpoints have degree > k (equivalently, whose smaller
    endpoint degree exceeds k).
    """
    degrees = graph.degrees()
    kmax = max(degrees.values(), default=0)
    node_hist = [0] * (kmax + 2)
    for d in degrees.values():
        node_hist[d] += 1
    edge_hist = [0] * (kmax + 2)
    for u, v, _ in graph.edges():
        edge_hist[min(degrees[u], degrees[v])] += 1
    n_above = [0] * (kmax + 2)
    e_above = [0] * (kmax + 2)
    for k in range(kmax - 1, -1, -1):
        n_above[k] = n_above[k + 1] + node_hist[k + 1]
        e_above[k] = e_above[k + 1] + edge_hist[k + 1]
    return n_above[: kmax + 1], e_above[: kmax + 1]


def _count_stats(counts: list[int], denom: int) -> tuple[float, float, float, float]:
    """Mean, sd and 5/95 percentiles of 2 c / denom from exact integer sums.

    Integer totals make the reduction order irrelevant, so parallel and
    serial ensembles aggregate identically.
    """
    n = len(counts)
    s1 = sum(counts)
    s2 = sum(c * c for c in counts)
    mean_c = s1 / n
    var_c = s2 / n - mean_c * mean_c
    mean = 2.0 * mean_c / denom
    sd = 2.0 * math.sqrt(max(var_c, 0.0)) / denom
    values = np.asarray(sorted(counts), dtype=float) * (2.0 / denom)
    p05, p95 = np.percentile(values, [5.0, 95.0])
    return mean, sd, float(p05), float(p95)


def _float_stats(values: list[float]) -> tuple[float, float, float, float]:
    ordered = np.sort(np.asarray(values, dtype=float))
    p05, p95 = np.percentile(ordered, [5.0, 95.0])
    return float(np.mean(ordered)), float(np.std(ordered)), float(p05), float(p95)


def _topological_points(graph: UndirectedView, samples: list[NullSample]) -> list[RichClubPoint]:
    n_above_obs, e_above_obs = _degree_profile(graph)
    kmax = len(n_above_obs) - 1
    profiles = [_degree_profile(s.graph) for s in samples]

    points: list[RichClubPoint] = []
    for k in range(kmax):
        n = n_above_obs[k]
        if n < 2:
            continue
        denom = n * (n - 1)
        phi_obs = 2.0 * e_above_obs[k] / denom
        included: list[int] = []
        excluded = 0
        for sample_n_above, sample_e_above in profiles:
            # the sample's own degrees decide whether its club is defined
            n_s = sample_n_above[k] if k < len(sample_n_above) else 0
            if n_s < 2:
                excluded += 1
                continue
            included.append(sample_e_above[k])
        if included:
            mean, sd, p05, p95 = _count_stats(included, denom)
            rho = phi_obs / mean if mean > 0 else None
        else:
            mean = sd = p05 = p95 = rho = None
        points.append(
            RichClubPoint(
                k=k,
                n_above=n,
                phi=phi_obs,
                phi_null_mean=mean,
                phi_null_sd=sd,
                phi_null_p05=p05,
                phi_null_p95=p95,
                rho=rho,
                null_excluded=excluded,
            )
        )
    return points


def _weighted_points(graph: UndirectedView, samples: list[NullSample]) -> list[RichClubPoint]:
    # Club membership is fixed by the observed ranking when scoring null
    # samples; the weight prefix is shared because the multiset is preserved.
    ranking = top_strength_club(graph, graph.node_count())
    prefix = _descending_weight_prefix(graph)

    points: list[RichClubPoint] = []
    for r in range(2, len(ranking) + 1):
        club = set(ranking[:r])
        try:
            phi_obs = _weighted_club_ratio(graph, club, prefix)
        except InsufficientEdges:
            continue
        values: list[float] = []
        excluded = 0
        for sample in samples:
            try:
                values.append(_weighted_club_ratio(sample.graph, club, prefix))
            except InsufficientEdges:
                excluded += 1
        if values:
            mean, sd, p05, p95 = _float_stats(values)
            rho = phi_obs / mean if mean > 0 else None
        else:
            mean = sd = p05 = p95 = rho = None
        points.append(
            RichClubPoint(
                k=r,
                n_above=r,
                phi=phi_obs,
                phi_null_mean=mean,
                phi_null_sd=sd,
                phi_null_p05=p05,
                phi_null_p95=p95,
                rho=rho,
                null_excluded=excluded,
            )
        )
    return points


def rho_curve(
    graph: UndirectedView,
    cfg: EnsembleConfig,
    *,
    weighted: bool = False,
    workers: int = 1,
) -> RichClubCurve:
    """Observed estimator, ensemble statistics and their ratio per threshold.

    Thresholds run over every integer degree from 0 to max degree - 1 where
    at least two observed nodes qualify (every strength rank from 2 upward
    for the weighted variant). Samples whose club is undefined at a
    threshold are dropped from that threshold's statistics and counted in
    ``null_excluded``; they are never scored as zero.

    The curve is a pure function of (graph, cfg): reruns and parallel runs
    reproduce it byte for byte.
    """
    if graph.edge_count() < 2:
        raise TooFewEdges(
            f"need at least 2 edges for a rich-club curve, got {graph.edge_count()}"
        )
    samples = generate_ensemble(graph, cfg, workers=workers)
    builder = _weighted_points if weighted else _topological_points
    return RichClubCurve(
        points=builder(graph, samples),
        ensemble_config=cfg,
        weighted_variant=weighted,
    )
