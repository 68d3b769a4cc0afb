"""Weighted directed country network and its symmetrized view.

The directed :class:`CountryNetwork` stores entity counts per ordered country
pair and is the substrate every analysis runs on. Rich-club statistics operate
on the :class:`UndirectedView`, where the weight of the pair {A, B} is the sum
of both directed weights, so total weight is preserved by construction.

Node identity is the code string itself. In production the codes are
three-letter ISO-3166 country codes; the graph layer does not enforce the
format (that is the ingestion boundary's job), so small test graphs can use
any labels.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import SelfLoopRejected, UnknownNode


def undirected_key(u: str, v: str) -> tuple[str, str]:
    """Canonical (sorted) key for the undirected pair {u, v}."""
    return (u, v) if u <= v else (v, u)


class CountryNetwork:
    """Weighted directed graph over country codes.

    Weights are positive integer counts; zero-weight edges are never stored
    and self-loops are rejected at the edge level. The network is mutable
    while it is being built (single writer) and immutable after
    :meth:`freeze`; a frozen network is safe to read from any number of
    threads.
    """

    __slots__ = ("_out", "_in", "_frozen")

    def __init__(self) -> None:
        self._out: dict[str, dict[str, int]] = {}
        self._in: dict[str, dict[str, int]] = {}
        self._frozen = False

    # -- construction ------------------------------------------------------

    def add_node(self, code: str) -> None:
        """Register a node; isolated nodes are legal."""
        self._check_mutable()
        self._out.setdefault(code, {})
        self._in.setdefault(code, {})

    def accumulate_edge(self, src: str, dst: str, delta: int = 1) -> None:
        """Add ``delta`` to the weight of the directed edge src -> dst.

        Both endpoints are added to the node set if absent. Raises
        :class:`SelfLoopRejected` when src == dst; whether the rejection is
        counted or silently discarded is the caller's decision.
        """
        if src == dst:
            raise SelfLoopRejected(f"self-loop {src!r} -> {dst!r}")
        if delta < 1:
            raise ValueError(f"delta must be >= 1, got {delta}")
        self._check_mutable()
        self.add_node(src)
        self.add_node(dst)
        self._out[src][dst] = self._out[src].get(dst, 0) + delta
        self._in[dst][src] = self._in[dst].get(src, 0) + delta

    def freeze(self) -> "CountryNetwork":
        """Mark construction finished; any further mutation raises."""
        self._frozen = True
        return self

    def _check_mutable(self) -> None:
        if self._frozen:
            raise RuntimeError("network is frozen")

    # -- queries -------------------------------------------------------------

    @property
    def frozen(self) -> bool:
        return self._frozen

    def __contains__(self, code: str) -> bool:
        return code in self._out

    def nodes(self) -> set[str]:
        return set(self._out)

    def node_count(self) -> int:
        return len(self._out)

    def edge_count(self) -> int:
        return sum(len(targets) for targets in self._out.values())

    def total_weight(self) -> int:
        return sum(w for targets in self._out.values() for w in targets.values())

    def weight(self, src: str, dst: str) -> int:
        """Directed weight, 0 when the edge is absent."""
        return self._out.get(src, {}).get(dst, 0)

    def edges(self) -> Iterator[tuple[str, str, int]]:
        for src, targets in self._out.items():
            for dst, w in targets.items():
                yield src, dst, w

    def sorted_edges(self) -> list[tuple[str, str, int]]:
        """Edges sorted by (src, dst); the serialization order."""
        return sorted(self.edges())

    def _require_node(self, code: str) -> None:
        if code not in self._out:
            raise UnknownNode(f"unknown country {code!r}")

    def out_strength(self, code: str) -> int:
        self._require_node(code)
        return sum(self._out[code].values())

    def in_strength(self, code: str) -> int:
        self._require_node(code)
        return sum(self._in[code].values())

    def strength(self, code: str) -> int:
        """Sum of all incoming and outgoing flow magnitudes at ``code``."""
        return self.out_strength(code) + self.in_strength(code)

    def neighbors(self, code: str) -> set[str]:
        """Distinct neighbors regardless of edge direction."""
        self._require_node(code)
        return set(self._out[code]) | set(self._in[code])

    def degree(self, code: str) -> int:
        """Count of distinct neighbors in the symmetrized view."""
        return len(self.neighbors(code))

    def degrees(self) -> dict[str, int]:
        return {code: self.degree(code) for code in self._out}

    def max_degree(self) -> int:
        return max(self.degrees().values(), default=0)

    # -- derived networks ------------------------------------------------------

    def undirected(self) -> "UndirectedView":
        """Symmetrized view; weight({A, B}) = weight(A->B) + weight(B->A)."""
        weights: dict[tuple[str, str], int] = {}
        for src, dst, w in self.sorted_edges():
            key = undirected_key(src, dst)
            weights[key] = weights.get(key, 0) + w
        return UndirectedView(self._out.keys(), weights)

    def subgraph_above_degree(self, k: int) -> "CountryNetwork":
        """Induced subnetwork on nodes whose degree exceeds ``k``.

        Degrees are measured once on this network; the rule is not applied
        iteratively to the shrinking result. May be empty.
        """
        keep = {code for code, d in self.degrees().items() if d > k}
        sub = CountryNetwork()
        for code in sorted(keep):
            sub.add_node(code)
        for src, dst, w in self.edges():
            if src in keep and dst in keep:
                sub.accumulate_edge(src, dst, w)
        return sub.freeze()

    def remove_node(self, code: str) -> "CountryNetwork":
        """Copy of this network without ``code`` and its incident edges."""
        self._require_node(code)
        reduced = CountryNetwork()
        for other in self._out:
            if other != code:
                reduced.add_node(other)
        for src, dst, w in self.edges():
            if src != code and dst != code:
                reduced.accumulate_edge(src, dst, w)
        return reduced.freeze()

    def copy(self) -> "CountryNetwork":
        """Unfrozen deep copy."""
        dup = CountryNetwork()
        for code in self._out:
            dup.add_node(code)
        for src, dst, w in self.edges():
            dup.accumulate_edge(src, dst, w)
        return dup

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CountryNetwork):
            return NotImplemented
        return self._out.keys() == other._out.keys() and {
            (s, d): w for s, d, w in self.edges()
        } == {(s, d): w for s, d, w in other.edges()}

    def __hash__(self) -> int:  # pragma: no cover - mutable container
        raise TypeError("CountryNetwork is not hashable")

    def __repr__(self) -> str:
        return (
            f"CountryNetwork(nodes={self.node_count()}, edges={self.edge_count()}, "
            f"total_weight={self.total_weight()})"
        )


class UndirectedView:
    """Symmetrized, weight-summed form of a country network.

    Immutable once constructed. Edge keys are canonically ordered pairs with
    no self-loops and positive integer weights; nodes without edges are kept,
    since degree-0 nodes still belong to the degree sequence.
    """

    __slots__ = ("_weights", "_adj")

    def __init__(
        self,
        nodes: Iterable[str],
        weights: Mapping[tuple[str, str], int],
    ) -> None:
        self._adj: dict[str, set[str]] = {code: set() for code in nodes}
        self._weights: dict[tuple[str, str], int] = {}
        for (u, v), w in weights.items():
            if u == v:
                raise SelfLoopRejected(f"self-loop on {u!r}")
            if w < 1:
                raise ValueError(f"weights must be >= 1, got {w} on {u!r}-{v!r}")
            key = undirected_key(u, v)
            if key in self._weights:
                raise ValueError(f"duplicate edge {key}")
            self._weights[key] = int(w)
            self._adj.setdefault(u, set()).add(v)
            self._adj.setdefault(v, set()).add(u)

    def nodes(self) -> set[str]:
        return set(self._adj)

    def node_count(self) -> int:
        return len(self._adj)

    def edge_count(self) -> int:
        return len(self._weights)

    def total_weight(self) -> int:
        return sum(self._weights.values())

    def has_edge(self, u: str, v: str) -> bool:
        return undirected_key(u, v) in self._weights

    def weight(self, u: str, v: str) -> int:
        return self._weights.get(undirected_key(u, v), 0)

    def edges(self) -> Iterator[tuple[str, str, int]]:
        for (u, v), w in self._weights.items():
            yield u, v, w

    def edge_keys(self) -> set[tuple[str, str]]:
        return set(self._weights)

    def weight_multiset(self) -> list[int]:
        """Edge weights, sorted ascending; the preserved null-model quantity."""
        return sorted(self._weights.values())

    def _require_node(self, code: str) -> None:
        if code not in self._adj:
            raise UnknownNode(f"unknown country {code!r}")

    def neighbors(self, code: str) -> set[str]:
        self._require_node(code)
        return set(self._adj[code])

    def degree(self, code: str) -> int:
        self._require_node(code)
        return len(self._adj[code])

    def degrees(self) -> dict[str, int]:
        return {code: len(nbrs) for code, nbrs in self._adj.items()}

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self._adj.values()), default=0)

    def strength(self, code: str) -> int:
        """Sum of incident edge weights; matches the directed in+out total."""
        self._require_node(code)
        return sum(self._weights[undirected_key(code, nbr)] for nbr in self._adj[code])

    def strengths(self) -> dict[str, int]:
        return {code: self.strength(code) for code in self._adj}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UndirectedView):
            return NotImplemented
        return self._adj.keys() == other._adj.keys() and self._weights == other._weights

    def __hash__(self) -> int:  # pragma: no cover - container semantics
        raise TypeError("UndirectedView is not hashable")

    def __repr__(self) -> str:
        return f"UndirectedView(nodes={self.node_count()}, edges={self.edge_count()})"
