"""Patterns: canonical graphs, copy enumeration vs naive oracle, covers."""

import numpy as np
import pytest

from htiling.graphs import SmallGraph
from htiling.patterns import (
    Embedding,
    covering_number,
    custom_pattern,
    enumerate_copies,
    is_rigid,
    pattern_by_name,
    pattern_complete_bipartite,
    pattern_h,
    pattern_hhat,
    pattern_k2,
)

from oracles import count_copies_naive, random_graph


def test_canonical_patterns():
    h = pattern_h()
    assert h.n == 6 and h.graph.edge_count == 5
    assert h.labels == ("u", "v", "a", "b", "c", "d")
    # centres adjacent, two leaves each
    assert h.graph.degree(0) == 3 and h.graph.degree(1) == 3
    assert [h.graph.degree(i) for i in range(2, 6)] == [1, 1, 1, 1]

    hh = pattern_hhat()
    assert hh.n == 7 and hh.graph.edge_count == 7
    assert hh.labels == ("u", "v", "w", "a", "b", "c", "d")
    assert hh.graph.degree(2) == 2  # the extra vertex sees exactly b and c
    assert hh.graph.has_edge(2, 4) and hh.graph.has_edge(2, 5)

    assert pattern_k2().graph.edge_count == 1
    assert pattern_complete_bipartite(3, 3).graph.edge_count == 9
    assert pattern_by_name("Hhat").name == "Hhat"
    with pytest.raises(ValueError):
        pattern_by_name("K5")


def test_known_copy_counts():
    h = pattern_h()
    assert len(enumerate_copies(h, SmallGraph.complete_bipartite(3, 3))) == 9
    assert len(enumerate_copies(h, SmallGraph.complete_bipartite(2, 10))) == 0
    assert len(enumerate_copies(pattern_k2(), SmallGraph.complete(3))) == 3
    assert len(enumerate_copies(h, h.graph)) == 1
    assert len(enumerate_copies(pattern_hhat(), pattern_hhat().graph)) == 1


def test_copy_enumeration_matches_naive_oracle():
    rng = np.random.default_rng(10)
    pats = [pattern_h(), pattern_hhat(), pattern_k2(), pattern_complete_bipartite(2, 2)]
    for _ in range(40):
        n = int(rng.integers(2, 9))
        g = random_graph(rng, n, float(rng.uniform(0.2, 0.9)))
        for pat in pats:
            assert len(enumerate_copies(pat, g)) == count_copies_naive(pat, g), (pat.name, g.adj)


def test_copies_validate_and_are_sorted():
    rng = np.random.default_rng(11)
    g = random_graph(rng, 9, 0.6)
    copies = enumerate_copies(pattern_h(), g)
    keys = [tuple(sorted(e.image)) for e in copies]
    assert keys == sorted(keys)
    for emb in copies:
        assert emb.is_valid_in(g)
    # distinct image edge sets
    assert len({emb.image_edges() for emb in copies}) == len(copies)
    assert len(enumerate_copies(pattern_h(), g, limit=3)) == min(3, len(copies))


def test_copies_on_same_vertices_differ_by_edges():
    # K_{3,3} hosts nine H-copies, all on the same six vertices: copies are
    # distinguished by image edge set, not image vertex set
    copies = enumerate_copies(pattern_h(), SmallGraph.complete_bipartite(3, 3))
    assert len(copies) == 9
    assert len({frozenset(e.image) for e in copies}) == 1


def test_embedding_validity_checks():
    h = pattern_h()
    good = Embedding(h, (0, 1, 2, 3, 4, 5))
    assert good.is_valid_in(h.graph)
    assert not Embedding(h, (1, 0, 2, 3, 4, 5)).is_valid_in(h.graph)
    assert not Embedding(h, (0, 0, 2, 3, 4, 5)).is_valid_in(h.graph)


def test_covering_numbers():
    h = pattern_h()
    assert covering_number(h, 1) == 2
    assert covering_number(h, 2) == 6
    assert covering_number(pattern_complete_bipartite(3, 3), 1) == 3
    assert covering_number(pattern_k2(), 1) == 1
    with pytest.raises(ValueError):
        covering_number(h, 3)


def test_covering_monotone_under_edge_addition():
    rng = np.random.default_rng(12)
    for _ in range(20):
        g = random_graph(rng, 7, 0.3)
        tau = covering_number(custom_pattern(g), 1)
        non_edges = [(u, v) for u in range(7) for v in range(u + 1, 7) if not g.has_edge(u, v)]
        if not non_edges:
            continue
        u, v = non_edges[int(rng.integers(len(non_edges)))]
        g2 = SmallGraph.from_edges(7, list(g.edges()) + [(u, v)])
        assert covering_number(custom_pattern(g2), 1) >= tau


def test_rigidity():
    assert is_rigid(pattern_complete_bipartite(3, 3), (3, 3))
    assert not is_rigid(pattern_h(), (3, 3))  # cover number 2, not 3
    assert is_rigid(pattern_k2(), (1, 1))
    assert not is_rigid(pattern_hhat(), (3, 4))  # odd cycle inside: not bipartite
    # wrong part sizes for the pattern's order
    assert not is_rigid(pattern_h(), (2, 3))
    with pytest.raises(ValueError):
        is_rigid(pattern_h(), (4, 2))
