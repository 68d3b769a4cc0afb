import itertools
import random

import pytest

from leaknet import CountryNetwork, SelfLoopRejected, UnknownNode

from conftest import build_network, complete_view, random_network


def test_accumulate_is_additive():
    net = CountryNetwork()
    net.accumulate_edge("RUS", "VGB", 1)
    net.accumulate_edge("RUS", "VGB", 1)
    assert net.weight("RUS", "VGB") == 2


def test_self_loop_rejected():
    net = CountryNetwork()
    with pytest.raises(SelfLoopRejected):
        net.accumulate_edge("CHN", "CHN", 1)
    assert net.node_count() == 0


def test_zero_delta_rejected():
    net = CountryNetwork()
    with pytest.raises(ValueError):
        net.accumulate_edge("A", "B", 0)


def test_flows_fixture_weights(flows_net):
    assert {(s, d): w for s, d, w in flows_net.edges()} == {
        ("A", "B"): 1,
        ("B", "A"): 2,
        ("A", "C"): 1,
    }
    assert flows_net.undirected().weight("A", "B") == 3


def test_degree_star():
    net = CountryNetwork()
    for leaf in "abcde":
        net.accumulate_edge("hub", leaf, 1)
    assert net.degree("hub") == 5


def test_degree_isolated_node():
    net = CountryNetwork()
    net.add_node("XXX")
    assert net.degree("XXX") == 0
    assert net.strength("XXX") == 0


def test_fixture_degree_and_strength(flows_net):
    assert flows_net.degree("A") == 2  # neighbors B and C
    # out 1 (to B) + 1 (to C), in 2 (from B)
    assert flows_net.strength("A") == 4


def test_strength_from_flows():
    net = build_network([("X", "Y", 5), ("P", "X", 2), ("Q", "X", 3)])
    assert net.strength("X") == 10


def test_unknown_node_raises(flows_net):
    with pytest.raises(UnknownNode):
        flows_net.degree("ZZZ")
    with pytest.raises(UnknownNode):
        flows_net.strength("ZZZ")


def test_subgraph_complete_graph():
    net = CountryNetwork()
    nodes = [f"k{i}" for i in range(5)]
    for a, b in itertools.combinations(nodes, 2):
        net.accumulate_edge(a, b, 1)
    net.freeze()
    sub = net.subgraph_above_degree(3)
    assert sub.nodes() == set(nodes)  # every degree is 4 > 3
    assert sub.edge_count() == net.edge_count()


def test_subgraph_above_max_degree_is_empty(six_node_net):
    sub = six_node_net.subgraph_above_degree(six_node_net.max_degree())
    assert sub.node_count() == 0
    assert sub.edge_count() == 0


def test_subgraph_fixture(six_node_net):
    assert six_node_net.degrees() == {"a": 3, "b": 3, "c": 3, "d": 4, "e": 2, "f": 1}
    sub = six_node_net.subgraph_above_degree(2)
    assert sub.nodes() == {"a", "b", "c", "d"}
    # degrees come from the original network: e keeps nothing, d keeps a,b,c
    assert sub.degree("d") == 3


def test_subgraph_is_not_iterative():
    # path x-y-z plus hub: removing low-degree nodes must not cascade
    net = build_network(
        [("h", "x", 1), ("h", "y", 1), ("h", "z", 1), ("x", "y", 1)]
    )
    sub = net.subgraph_above_degree(1)
    # x, y have degree 2, h has 3; z drops. h-x, h-y, x-y survive.
    assert sub.nodes() == {"h", "x", "y"}
    assert sub.edge_count() == 3


def test_strength_sum_is_twice_total_weight():
    for seed in range(10):
        net = random_network(20, 60, seed)
        assert sum(net.strength(c) for c in net.nodes()) == 2 * net.total_weight()


def test_degree_sum_is_twice_undirected_edges():
    for seed in range(10):
        net = random_network(20, 60, seed)
        view = net.undirected()
        assert sum(net.degree(c) for c in net.nodes()) == 2 * view.edge_count()


def test_subgraph_monotone_in_threshold():
    net = random_network(25, 80, 3)
    previous = net.nodes()
    for k in range(net.max_degree() + 1):
        current = net.subgraph_above_degree(k).nodes()
        assert current <= previous
        previous = current


def test_accumulation_order_is_irrelevant():
    moves = [("A", "B", 1), ("B", "A", 2), ("A", "C", 1), ("C", "B", 4), ("A", "B", 3)]
    rng = random.Random(11)
    reference = build_network(moves)
    for _ in range(12):
        shuffled = moves[:]
        rng.shuffle(shuffled)
        assert build_network(shuffled) == reference


def test_undirected_weight_matches_pair_sum_exhaustively():
    # exhaustive pair scan on random graphs, largest has 200 nodes
    for n_nodes, n_acc, seed in [(20, 50, 1), (80, 300, 2), (200, 800, 3)]:
        net = random_network(n_nodes, n_acc, seed, max_weight=9)
        view = net.undirected()
        nodes = sorted(net.nodes())
        for i, a in enumerate(nodes):
            for b in nodes[i + 1 :]:
                assert view.weight(a, b) == net.weight(a, b) + net.weight(b, a)
        assert view.total_weight() == net.total_weight()


def test_freeze_blocks_mutation(flows_net):
    with pytest.raises(RuntimeError):
        flows_net.accumulate_edge("A", "D", 1)
    thawed = flows_net.copy()
    thawed.accumulate_edge("A", "D", 1)  # copies are mutable again
    assert thawed.weight("A", "D") == 1


def test_remove_node_leaves_original_intact(flows_net):
    reduced = flows_net.remove_node("B")
    assert "B" not in reduced
    assert reduced.nodes() == {"A", "C"}
    assert flows_net.nodes() == {"A", "B", "C"}
    with pytest.raises(UnknownNode):
        flows_net.remove_node("ZZZ")


def test_undirected_view_rejects_bad_edges():
    from leaknet import UndirectedView

    with pytest.raises(SelfLoopRejected):
        UndirectedView(["a"], {("a", "a"): 1})
    with pytest.raises(ValueError):
        UndirectedView(["a", "b"], {("a", "b"): 0})
    assert complete_view(4).edge_count() == 6


def test_view_strength_equals_directed_strength():
    net = random_network(15, 50, 7, max_weight=6)
    view = net.undirected()
    for c in net.nodes():
        assert view.strength(c) == net.strength(c)


def test_frozen_network_supports_concurrent_reads():
    from concurrent.futures import ThreadPoolExecutor

    net = random_network(40, 150, seed=21, max_weight=5)
    expected = {c: (net.degree(c), net.strength(c)) for c in net.nodes()}

    def probe(code):
        return code, (net.degree(code), net.strength(code))

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = dict(pool.map(probe, list(net.nodes()) * 20))
    assert results == expected
