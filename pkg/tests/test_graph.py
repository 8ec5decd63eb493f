from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kappa1.errors import CapExceeded, GraphFormatError, InvalidInput
from kappa1.graph import (
    Graph,
    binomial,
    complete_graph,
    components,
    export_dot,
    kneser_graph,
    parse_graph,
    path_graph,
    rank_subset,
    serialize_graph,
    unrank_subset,
)

from .strategies import graphs


@pytest.mark.parametrize("n, k, expected", [(9, 3, 84), (3, 3, 1), (2, 3, 0), (0, 0, 1), (7, 0, 1)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_rejects_negative():
    with pytest.raises(InvalidInput):
        binomial(-1, 2)


def test_petersen(petersen):
    assert petersen.vertex_count == 10
    assert petersen.edge_count == 15
    assert {petersen.degree(v) for v in range(10)} == {3}
    assert petersen.params == (5, 2)
    assert petersen.labels[0] == (1, 2)


def test_kg63_is_a_perfect_matching():
    g = kneser_graph(6, 3)
    assert g.vertex_count == 20
    assert g.edge_count == 10
    comps = components(g)
    assert len(comps) == 10
    assert all(len(c) == 2 for c in comps)


@pytest.mark.parametrize("n", [1, 2, 5, 8])
def test_kn1_is_complete(n):
    g = kneser_graph(n, 1)
    assert g.adj == complete_graph(n).adj
    assert g.is_complete()


def test_kneser_single_vertex():
    g = kneser_graph(3, 3)
    assert g.vertex_count == 1 and g.edge_count == 0


def test_kneser_rejects_bad_arguments():
    with pytest.raises(InvalidInput):
        kneser_graph(2, 3)
    with pytest.raises(InvalidInput):
        kneser_graph(5, 0)
    with pytest.raises(CapExceeded):
        kneser_graph(30, 15)
    with pytest.raises(CapExceeded):
        kneser_graph(9, 3, cap=50)


def test_kneser_adjacency_is_label_disjointness_exhaustive():
    # Independent check: rebuild every KG(n, k), n <= 12, from plain set logic.
    for n in range(1, 13):
        for k in range(1, n + 1):
            g = kneser_graph(n, k)
            subsets = [frozenset(c) for c in itertools.combinations(range(1, n + 1), k)]
            assert g.vertex_count == math.comb(n, k)
            assert [frozenset(ls) for ls in g.labels] == subsets
            for u in range(g.vertex_count):
                expected = [v for v in range(g.vertex_count) if not subsets[u] & subsets[v]]
                assert g.neighbors(u) == expected
                assert g.degree(u) == math.comb(n - k, k)


def test_vertex_zero_is_first_subset():
    assert kneser_graph(9, 3).labels[0] == (1, 2, 3)


def test_components_path(p3):
    assert components(p3, {1}) == [frozenset({0}), frozenset({2})]
    assert components(p3) == [frozenset({0, 1, 2})]
    assert components(p3, {0, 1, 2}) == []


def test_components_rejects_out_of_range(p3):
    with pytest.raises(InvalidInput):
        components(p3, {7})


@given(graphs(max_vertices=10), st.data())
def test_components_partition(g, data):
    removed = data.draw(st.sets(st.integers(0, g.vertex_count - 1)))
    comps = components(g, removed)
    seen = set()
    for c in comps:
        assert not seen & c
        seen |= c
    assert seen == set(range(g.vertex_count)) - removed
    assert [min(c) for c in comps] == sorted(min(c) for c in comps)
    where = {v: i for i, c in enumerate(comps) for v in c}
    for u, v in g.edges():
        if u in where and v in where:
            assert where[u] == where[v]
    if not removed:
        assert (len(comps) == 1) == g.is_connected()


def test_rank_examples():
    assert rank_subset((1, 2, 3), 9) == 0
    assert unrank_subset(0, 5, 2) == (1, 2)
    assert unrank_subset(9, 5, 2) == (4, 5)


def test_rank_matches_lexicographic_enumeration():
    for n in range(0, 15):
        for k in range(0, n + 1):
            for i, c in enumerate(itertools.combinations(range(1, n + 1), k)):
                assert rank_subset(c, n) == i
                assert unrank_subset(i, n, k) == c


@settings(max_examples=200)
@given(st.data())
def test_rank_unrank_round_trip(data):
    n = data.draw(st.integers(1, 60))
    k = data.draw(st.integers(0, n))
    size = math.comb(n, k)
    if size > 10**6:
        k = min(k, 3)
        size = math.comb(n, k)
    i = data.draw(st.integers(0, size - 1))
    assert rank_subset(unrank_subset(i, n, k), n) == i


def test_rank_rejects_malformed():
    with pytest.raises(InvalidInput):
        rank_subset((3, 1), 5)
    with pytest.raises(InvalidInput):
        rank_subset((1, 6), 5)
    with pytest.raises(InvalidInput):
        unrank_subset(10, 5, 2)


def test_parse_single_edge():
    g = parse_graph("graph 2 1\ne 0 1\n")
    assert g.vertex_count == 2 and g.edges() == [(0, 1)]


def test_parse_ignores_comments():
    g = parse_graph("# a path\ngraph 3 2  # header\ne 0 1\n\ne 1 2\n")
    assert g == path_graph(3)


def test_kneser_round_trip(petersen):
    text = serialize_graph(petersen)
    back = parse_graph(text)
    assert back == petersen
    assert back.params == (5, 2)
    assert serialize_graph(back) == text


@given(graphs(max_vertices=9))
def test_serialize_round_trip(g):
    assert parse_graph(serialize_graph(g)) == g


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("graph 2 1\ne 0 5\n", 2, "out of range"),
        ("graph 3 2\ne 0 1\ne 1 0\n", 3, "duplicate edge"),
        ("graph 3 1\ne 1 1\n", 2, "self-loop"),
        ("grph 3 1\n", 1, "header"),
        ("graph 3 1\nx 0 1\n", 2, "unknown record"),
        ("graph 3 1\ne 0\n", 2, "two endpoints"),
        ("graph 3 1\ne 0 1\nl 0 2,1\n", 3, "ascending"),
    ],
)
def test_parse_errors_name_the_line(text, line, fragment):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)
    assert fragment in str(info.value)


def test_parse_edge_count_mismatch():
    with pytest.raises(GraphFormatError, match="declares 2 edges"):
        parse_graph("graph 3 2\ne 0 1\n")


def test_labels_without_kneser_structure_keep_no_params():
    g = parse_graph("graph 2 1\ne 0 1\nl 0 1,2\nl 1 1,3\n")
    assert g.labels == ((1, 2), (1, 3))
    assert g.params is None


def test_export_dot_uses_label_names(petersen):
    dot = export_dot(petersen)
    assert dot.startswith("graph G {")
    assert dot.count(";") == 10 + 15
    assert '"{1,2}" -- "{3,4}";' in dot
    assert export_dot(petersen) == dot


def test_export_dot_unlabelled(p3):
    assert '"0" -- "1";' in export_dot(p3)


def test_graph_validation():
    with pytest.raises(InvalidInput):
        Graph(2, (0b10, 0))
    with pytest.raises(InvalidInput):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(InvalidInput):
        Graph.from_edges(2, [(0, 2)])
