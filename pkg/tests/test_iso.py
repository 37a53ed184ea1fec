import random

import pytest

from domreconf.graph import Graph, cycle_graph, path_graph, star_graph
from domreconf.iso import are_isomorphic, canonical_form, canonical_graph, enumerate_small_graphs

from oracles import naive_class_count, naive_isomorphic


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_class_counts_match_naive(n):
    assert len(list(enumerate_small_graphs(n))) == naive_class_count(n)


def test_known_counts():
    assert [len(list(enumerate_small_graphs(n))) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
    assert [len(list(enumerate_small_graphs(n, connected_only=True))) for n in range(1, 8)] == [
        1, 1, 2, 6, 21, 112, 853,
    ]


def test_out_of_range():
    with pytest.raises(ValueError):
        list(enumerate_small_graphs(0))
    with pytest.raises(ValueError):
        list(enumerate_small_graphs(9))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_pairwise_non_isomorphic(n):
    graphs = list(enumerate_small_graphs(n))
    forms = {canonical_form(g) for g in graphs}
    assert len(forms) == len(graphs)
    for g in graphs:
        assert canonical_graph(g) == g


def test_pairwise_non_isomorphic_naive():
    graphs = list(enumerate_small_graphs(5))
    for i, g in enumerate(graphs):
        for h in graphs[i + 1:]:
            assert not naive_isomorphic(g, h)


def test_canonical_form_invariant_under_relabelling():
    rng = random.Random(7)
    for g in [path_graph(6), cycle_graph(7), star_graph(5)] + list(enumerate_small_graphs(6))[::9]:
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert canonical_form(g) == canonical_form(h)
        assert are_isomorphic(g, h)


def test_are_isomorphic_matches_naive():
    graphs = list(enumerate_small_graphs(5))
    rng = random.Random(3)
    for _ in range(300):
        g, h = rng.choice(graphs), rng.choice(graphs)
        perm = list(range(5))
        rng.shuffle(perm)
        h = h.relabel(perm)
        assert are_isomorphic(g, h) == naive_isomorphic(g, h)


def test_are_isomorphic_distinguishes_same_degrees():
    # C6 versus two triangles: both 2-regular on 6 vertices
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not are_isomorphic(cycle_graph(6), two_triangles)
