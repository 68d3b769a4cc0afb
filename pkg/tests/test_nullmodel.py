import collections

import numpy as np
import pytest

from leaknet import (
    EnsembleConfig,
    TooFewEdges,
    UndirectedView,
    double_edge_swap,
    generate_ensemble,
    make_null_sample,
    shuffle_weights,
)

from conftest import complete_view, er_view, gnm_view


def recount_degrees(view):
    """Independent degree recount straight from the edge list."""
    counts = collections.Counter()
    for u, v, _ in view.edges():
        counts[u] += 1
        counts[v] += 1
    return {c: counts.get(c, 0) for c in view.nodes()}


def test_config_validation():
    with pytest.raises(ValueError):
        EnsembleConfig(n_samples=0)
    with pytest.raises(ValueError):
        EnsembleConfig(swaps_per_edge=0)
    with pytest.raises(ValueError):
        EnsembleConfig(master_seed=-1)
    assert EnsembleConfig().n_samples == 1000
    assert EnsembleConfig().swaps_per_edge == 10


def test_swap_on_disjoint_pair_always_applies():
    view = UndirectedView("abcd", {("a", "b"): 1, ("c", "d"): 1})
    rng = np.random.default_rng(0)
    swapped = double_edge_swap(view, rng)
    # both orientations are valid, so the proposal is always accepted
    assert swapped.edge_keys() != view.edge_keys()
    assert swapped.degrees() == view.degrees()


def test_swap_sharing_a_node_always_rejects():
    view = UndirectedView("abc", {("a", "b"): 1, ("a", "c"): 2})
    rng = np.random.default_rng(1)
    for _ in range(50):
        view_after = double_edge_swap(view, rng)
        assert view_after == view


def test_swap_needs_two_edges():
    lonely = UndirectedView("ab", {("a", "b"): 1})
    with pytest.raises(TooFewEdges):
        double_edge_swap(lonely, np.random.default_rng(0))


def test_many_swaps_preserve_every_degree():
    view = er_view(50, 0.12, seed=5)
    rng = np.random.default_rng(2)
    current = view
    for _ in range(1000):
        current = double_edge_swap(current, rng)
    assert recount_degrees(current) == recount_degrees(view)
    assert current.edge_count() == view.edge_count()


def test_shuffle_single_edge_is_identity():
    view = UndirectedView("ab", {("a", "b"): 7})
    assert shuffle_weights(view, np.random.default_rng(3)) == view


def test_shuffle_preserves_multiset():
    view = UndirectedView("abcd", {("a", "b"): 1, ("b", "c"): 2, ("c", "d"): 3})
    shuffled = shuffle_weights(view, np.random.default_rng(4))
    assert shuffled.weight_multiset() == [1, 2, 3]
    assert shuffled.edge_keys() == view.edge_keys()


def test_shuffle_histogram_exact_on_100_edges():
    view = gnm_view(40, 100, seed=8, max_weight=12)
    shuffled = shuffle_weights(view, np.random.default_rng(5))
    before = collections.Counter(w for _, _, w in view.edges())
    after = collections.Counter(w for _, _, w in shuffled.edges())
    assert before == after


def test_ensembles_are_reproducible():
    view = gnm_view(20, 40, seed=1, max_weight=5)
    cfg = EnsembleConfig(n_samples=3, swaps_per_edge=10, master_seed=7)
    first = generate_ensemble(view, cfg)
    second = generate_ensemble(view, cfg)
    assert [s.graph for s in first] == [s.graph for s in second]
    assert [s.seed_used for s in first] == [s.seed_used for s in second]


def test_sample_streams_are_index_local():
    # sample i is the same no matter which other samples were generated
    view = gnm_view(20, 40, seed=1)
    cfg = EnsembleConfig(n_samples=5, swaps_per_edge=5, master_seed=99)
    full = generate_ensemble(view, cfg)
    assert make_null_sample(view, cfg, 3).graph == full[3].graph


def test_parallel_equals_serial():
    view = gnm_view(25, 60, seed=2, max_weight=4)
    cfg = EnsembleConfig(n_samples=8, swaps_per_edge=6, master_seed=21)
    serial = generate_ensemble(view, cfg, workers=1)
    parallel = generate_ensemble(view, cfg, workers=3)
    assert [s.graph for s in serial] == [s.graph for s in parallel]


def test_complete_graph_is_rigid():
    view = complete_view(5, weight=2)
    cfg = EnsembleConfig(n_samples=6, swaps_per_edge=10, master_seed=13)
    for sample in generate_ensemble(view, cfg):
        assert sample.graph.edge_keys() == view.edge_keys()
        assert sample.graph.weight_multiset() == view.weight_multiset()


def test_every_sample_preserves_degrees_and_weights():
    view = gnm_view(30, 90, seed=6, max_weight=20)
    cfg = EnsembleConfig(n_samples=100, swaps_per_edge=10, master_seed=3)
    for sample in generate_ensemble(view, cfg):
        assert sample.graph.degrees() == view.degrees()
        assert sample.graph.weight_multiset() == view.weight_multiset()
        assert not any(u == v for u, v, _ in sample.graph.edges())


def test_ensemble_needs_two_edges():
    lonely = UndirectedView("ab", {("a", "b"): 1})
    with pytest.raises(TooFewEdges):
        generate_ensemble(lonely, EnsembleConfig(n_samples=1))


def test_swapping_actually_mixes():
    view = er_view(100, 0.1, seed=4)
    cfg = EnsembleConfig(n_samples=100, swaps_per_edge=10, master_seed=17)
    source_edges = view.edge_keys()
    similarities = []
    for sample in generate_ensemble(view, cfg):
        sampled = sample.graph.edge_keys()
        jac = len(source_edges & sampled) / len(source_edges | sampled)
        similarities.append(jac)
    assert sum(similarities) / len(similarities) < 0.5
