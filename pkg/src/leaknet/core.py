"""Strength ranking, threshold-core extraction and removal analysis.

The core at threshold k is the induced subnetwork on countries whose degree
exceeds k. Its report keeps full-network ranks and strengths for the members
(the core is a restriction of the global ranking, not a re-ranking) together
with the directed flows internal to the core and the fraction of total
network weight they carry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyNetwork
from .network import CountryNetwork


@dataclass(frozen=True)
class RankedCountry:
    rank: int
    country: str
    strength: int
    in_strength: int
    out_strength: int


# Full ranking of a network: strongest first, ties broken by ascending code.
StrengthRanking = list[RankedCountry]


@dataclass(frozen=True)
class CoreReport:
    k_used: int
    members: StrengthRanking
    internal_flows: list[tuple[str, str, int]]
    coverage: float

    @property
    def empty(self) -> bool:
        return not self.members

    def member_codes(self) -> frozenset[str]:
        return frozenset(row.country for row in self.members)


@dataclass(frozen=True)
class StabilityScan:
    """Core membership per threshold plus consecutive-set similarity."""

    entries: list[tuple[int, frozenset[str]]]
    consecutive_jaccard: list[float]

    def mean_jaccard(self) -> float:
        if not self.consecutive_jaccard:
            return 1.0
        return sum(self.consecutive_jaccard) / len(self.consecutive_jaccard)


def rank_by_strength(net: CountryNetwork) -> StrengthRanking:
    """Every node ranked by total strength, descending; code breaks ties."""
    if net.node_count() == 0:
        raise EmptyNetwork("cannot rank an empty network")
    rows = sorted(
        (
            (net.strength(c), net.in_strength(c), net.out_strength(c), c)
            for c in net.nodes()
        ),
        key=lambda row: (-row[0], row[3]),
    )
    return [
        RankedCountry(
            rank=i,
            country=code,
            strength=strength,
            in_strength=in_s,
            out_strength=out_s,
        )
        for i, (strength, in_s, out_s, code) in enumerate(rows, start=1)
    ]


def extract_core(net: CountryNetwork, k: int) -> CoreReport:
    """Core report at degree threshold k.

    Internal flows are sorted heaviest first. An empty core is a valid
    outcome and is reported with no members rather than raised.
    """
    if net.node_count() == 0:
        raise EmptyNetwork("cannot extract a core from an empty network")
    sub = net.subgraph_above_degree(k)
    member_set = sub.nodes()
    members = [row for row in rank_by_strength(net) if row.country in member_set]
    flows = sorted(sub.edges(), key=lambda edge: (-edge[2], edge[0], edge[1]))
    total = net.total_weight()
    internal = sum(w for _, _, w in flows)
    coverage = internal / total if total else 0.0
    return CoreReport(k_used=k, members=members, internal_flows=flows, coverage=coverage)


def jaccard(a: frozenset[str], b: frozenset[str]) -> float:
    """Set similarity in [0, 1]; two empty sets count as identical."""
    if not a and not b:
        return 1.0
    return len(a & b) / len(a | b)


def stability_scan(net: CountryNetwork, k_min: int, k_max: int) -> StabilityScan:
    """Core membership for every k in [k_min, k_max] and how much it drifts."""
    if k_min > k_max:
        raise ValueError(f"k_min {k_min} exceeds k_max {k_max}")
    degrees = net.degrees()
    entries: list[tuple[int, frozenset[str]]] = []
    for k in range(k_min, k_max + 1):
        members = frozenset(c for c, d in degrees.items() if d > k)
        entries.append((k, members))
    jaccards = [
        jaccard(entries[i][1], entries[i + 1][1]) for i in range(len(entries) - 1)
    ]
    return StabilityScan(entries=entries, consecutive_jaccard=jaccards)


def remove_and_rerank(
    net: CountryNetwork,
    removed: str,
    k: int,
) -> tuple[CoreReport, StrengthRanking]:
    """Drop one country and recompute the core and ranking at the same k.

    Operates on a reduced copy; the input network is left untouched. Removing
    the last node yields an empty ranking and an empty core report.
    """
    reduced = net.remove_node(removed)
    if reduced.node_count() == 0:
        return CoreReport(k_used=k, members=[], internal_flows=[], coverage=0.0), []
    return extract_core(reduced, k), rank_by_strength(reduced)
