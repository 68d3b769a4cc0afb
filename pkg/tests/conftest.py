import random

import pytest

from leaknet import CountryNetwork, UndirectedView


def build_network(edges):
    """Frozen CountryNetwork from (src, dst, weight) triples."""
    net = CountryNetwork()
    for src, dst, w in edges:
        net.accumulate_edge(src, dst, w)
    return net.freeze()


def random_network(n_nodes, n_accumulations, seed, max_weight=5):
    """Random directed network; node labels n000..; may leave isolated nodes."""
    rng = random.Random(seed)
    codes = [f"n{i:03d}" for i in range(n_nodes)]
    net = CountryNetwork()
    for c in codes:
        net.add_node(c)
    for _ in range(n_accumulations):
        a, b = rng.sample(codes, 2)
        net.accumulate_edge(a, b, rng.randint(1, max_weight))
    return net.freeze()


def er_view(n, p, seed, max_weight=1):
    """Undirected Erdos-Renyi graph with optional random integer weights."""
    rng = random.Random(seed)
    nodes = [f"n{i:03d}" for i in range(n)]
    weights = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                w = rng.randint(1, max_weight) if max_weight > 1 else 1
                weights[(nodes[i], nodes[j])] = w
    return UndirectedView(nodes, weights)


def gnm_view(n, m, seed, max_weight=1):
    """Undirected graph with exactly m edges drawn uniformly."""
    rng = random.Random(seed)
    nodes = [f"n{i:03d}" for i in range(n)]
    weights = {}
    while len(weights) < m:
        a, b = rng.sample(nodes, 2)
        key = (a, b) if a <= b else (b, a)
        if key not in weights:
            w = rng.randint(1, max_weight) if max_weight > 1 else 1
            weights[key] = w
    return UndirectedView(nodes, weights)


def complete_view(n, weight=1):
    nodes = [f"k{i:02d}" for i in range(n)]
    weights = {
        (nodes[i], nodes[j]): weight for i in range(n) for j in range(i + 1, n)
    }
    return UndirectedView(nodes, weights)


def planted_club_view(n_periphery=200, clique=10, chords=100, wires=3, seed=0):
    """A clique wired into a sparse ring-plus-chords periphery.

    The ring keeps periphery degrees small (2 + random chords + at most one
    wire anchor), so the clique's degree sits strictly above the periphery's
    maximum and the detection window exists by construction. Returns the
    view plus the clique node set.
    """
    rng = random.Random(seed)
    periph = [f"p{i:03d}" for i in range(n_periphery)]
    club = [f"q{i:02d}" for i in range(clique)]
    weights = {}
    for i in range(n_periphery):
        key = tuple(sorted((periph[i], periph[(i + 1) % n_periphery])))
        weights[key] = 1
    added = 0
    while added < chords:
        a, b = rng.sample(periph, 2)
        key = (a, b) if a <= b else (b, a)
        if key not in weights:
            weights[key] = 1
            added += 1
    for i in range(clique):
        for j in range(i + 1, clique):
            weights[(club[i], club[j])] = 1
    targets = rng.sample(periph, clique * wires)  # distinct anchors
    for idx, c in enumerate(club):
        for t in targets[idx * wires : (idx + 1) * wires]:
            weights[tuple(sorted((c, t)))] = 1
    return UndirectedView(periph + club, weights), set(club)


@pytest.fixture
def flows_net():
    """Three accumulations: (A->B,1), (B->A,2), (A->C,1)."""
    return build_network([("A", "B", 1), ("B", "A", 2), ("A", "C", 1)])


@pytest.fixture
def six_node_net():
    """Degrees a:3 b:3 c:3 d:4 e:2 f:1; weights 1..8 in edge-list order."""
    edges = [
        ("a", "b", 1),
        ("a", "c", 2),
        ("a", "d", 3),
        ("b", "c", 4),
        ("b", "d", 5),
        ("c", "d", 6),
        ("d", "e", 7),
        ("e", "f", 8),
    ]
    return build_network(edges)


@pytest.fixture
def triangle_net():
    """Directed weights A->B:5, B->C:2, C->A:1."""
    return build_network([("A", "B", 5), ("B", "C", 2), ("C", "A", 1)])
