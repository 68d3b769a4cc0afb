"""Degree- and weight-preserving randomization of the undirected view.

Each ensemble sample starts from a copy of the source graph, applies
``swaps_per_edge * edge_count`` attempted double-edge swaps (rejections count
toward the budget, so rigid graphs still terminate), and finishes with one
global permutation of the weight multiset over the rewired edge set. The
result preserves every node's degree exactly and the multiset of edge weights
exactly.

Reproducibility: sample ``i`` draws from a stream seeded by
``(master_seed, i)`` alone, so serial and parallel execution produce
bit-identical ensembles.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

import numpy as np

from .errors import TooFewEdges
from .network import UndirectedView, undirected_key

# Used whenever the caller does not pass a seed; never wall-clock.
DEFAULT_SEED = 20160509


@dataclass(frozen=True)
class EnsembleConfig:
    """Ensemble size, mixing length and seeding for one run."""

    n_samples: int = 1000
    swaps_per_edge: int = 10
    master_seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        if self.n_samples < 1:
            raise ValueError(f"n_samples must be >= 1, got {self.n_samples}")
        if self.swaps_per_edge < 1:
            raise ValueError(f"swaps_per_edge must be >= 1, got {self.swaps_per_edge}")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError("master_seed must fit in an unsigned 64-bit integer")


@dataclass(frozen=True)
class NullSample:
    """One randomized realization plus the seed that produced it."""

    graph: UndirectedView
    sample_index: int
    seed_used: int


class _EdgeSwapper:
    """Mutable edge-slot representation used during rewiring.

    Weights stay attached to their slot while the endpoints are rewired,
    which keeps the weight multiset intact through any number of swaps.
    The edge list is built in sorted order so identical inputs always see
    identical slot indexing.
    """

    def __init__(self, view: UndirectedView) -> None:
        items = sorted(view.edges())
        self.edges: list[tuple[str, str]] = [(u, v) for u, v, _ in items]
        self.weights: list[int] = [w for _, _, w in items]
        self.present: set[tuple[str, str]] = set(self.edges)

    def attempt_swap(self, i: int, j: int, flip: bool) -> bool:
        """Try rewiring slots i and j crosswise; False when rejected."""
        old1 = self.edges[i]
        old2 = self.edges[j]
        a, b = old1
        c, d = old2
        if flip:
            c, d = d, c
        if a == c or b == d:  # proposal would create a self-loop
            return False
        new1 = undirected_key(a, c)
        new2 = undirected_key(b, d)
        if new1 in self.present or new2 in self.present:
            return False
        self.present.remove(old1)
        self.present.remove(old2)
        self.present.add(new1)
        self.present.add(new2)
        self.edges[i] = new1
        self.edges[j] = new2
        return True

    def to_view(self, nodes) -> UndirectedView:
        return UndirectedView(nodes, dict(zip(self.edges, self.weights)))


def _draw_pair(rng: np.random.Generator, m: int) -> tuple[int, int, bool]:
    """Two distinct edge slots drawn uniformly, plus the orientation bit."""
    i = int(rng.integers(0, m))
    j = int(rng.integers(0, m - 1))
    if j >= i:
        j += 1
    return i, j, bool(rng.integers(0, 2))


def double_edge_swap(graph: UndirectedView, rng: np.random.Generator) -> UndirectedView:
    """One attempted degree-preserving swap, applied or rejected.

    Two distinct edges {a,b} and {c,d} are drawn uniformly and re-joined
    crosswise in one of the two orientations (one random bit). The proposal
    is kept only when it introduces no self-loop and no edge that already
    exists; either way every node's degree is unchanged.
    """
    m = graph.edge_count()
    if m < 2:
        raise TooFewEdges(f"need at least 2 edges to swap, got {m}")
    swapper = _EdgeSwapper(graph)
    i, j, flip = _draw_pair(rng, m)
    swapper.attempt_swap(i, j, flip)
    return swapper.to_view(graph.nodes())


def shuffle_weights(graph: UndirectedView, rng: np.random.Generator) -> UndirectedView:
    """Randomly permute the weight multiset across the existing edges."""
    items = sorted(graph.edges())
    if not items:
        return UndirectedView(graph.nodes(), {})
    weights = [w for _, _, w in items]
    perm = rng.permutation(len(weights))
    reassigned = {(u, v): weights[int(p)] for (u, v, _), p in zip(items, perm)}
    return UndirectedView(graph.nodes(), reassigned)


def sample_seed_sequence(cfg: EnsembleConfig, sample_index: int) -> np.random.SeedSequence:
    return np.random.SeedSequence([cfg.master_seed, sample_index])


def make_null_sample(source: UndirectedView, cfg: EnsembleConfig, sample_index: int) -> NullSample:
    """Build sample ``sample_index`` of the ensemble for ``source``."""
    m = source.edge_count()
    if m < 2:
        raise TooFewEdges(f"need at least 2 edges to randomize, got {m}")
    seq = sample_seed_sequence(cfg, sample_index)
    rng = np.random.default_rng(seq)
    seed_used = int(seq.generate_state(1, np.uint64)[0])

    swapper = _EdgeSwapper(source)
    attempts = cfg.swaps_per_edge * m
    first = rng.integers(0, m, size=attempts)
    second = rng.integers(0, m - 1, size=attempts)
    flips = rng.integers(0, 2, size=attempts)
    for t in range(attempts):
        i = int(first[t])
        j = int(second[t])
        if j >= i:
            j += 1
        swapper.attempt_swap(i, j, bool(flips[t]))

    perm = rng.permutation(m)
    swapper.weights = [swapper.weights[int(p)] for p in perm]
    return NullSample(
        graph=swapper.to_view(source.nodes()),
        sample_index=sample_index,
        seed_used=seed_used,
    )


def generate_ensemble(
    source: UndirectedView,
    cfg: EnsembleConfig,
    workers: int = 1,
) -> list[NullSample]:
    """All ``cfg.n_samples`` randomizations of ``source``, in index order.

    ``workers > 1`` fans samples out over processes; because each sample's
    stream depends only on (master_seed, index), the output is identical to
    the serial run.
    """
    if source.edge_count() < 2:
        raise TooFewEdges(
            f"need at least 2 edges to build an ensemble, got {source.edge_count()}"
        )
    indices = range(cfg.n_samples)
    if workers <= 1:
        return [make_null_sample(source, cfg, i) for i in indices]
    build = partial(make_null_sample, source, cfg)
    chunk = max(1, math.ceil(cfg.n_samples / (workers * 4)))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(build, indices, chunksize=chunk))
