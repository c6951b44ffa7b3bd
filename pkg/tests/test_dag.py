import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from proofgrade.dag import (
    Digraph,
    all_topological_orderings,
    count_linear_extensions,
    iter_topological_orderings,
    minimum_vertex_cover,
    transitive_closure,
)
from proofgrade.errors import CapExceeded, TooLarge

from oracles import bfs_reach, brute_mvc, brute_orderings

SAMPLE_EDGES = [("1", "2"), ("2", "3"), ("2", "4"), ("4", "6"), ("3", "5"), ("5", "6")]
SAMPLE_NODES = [str(i) for i in range(1, 7)]


@pytest.fixture
def sample_graph():
    return Digraph.from_edges(SAMPLE_NODES, SAMPLE_EDGES)


@st.composite
def dags(draw, max_nodes=7):
    n = draw(st.integers(0, max_nodes))
    nodes = [f"n{i}" for i in range(n)]
    perm = draw(st.permutations(nodes))
    edges = [
        (perm[i], perm[j])
        for i in range(n)
        for j in range(i + 1, n)
        if draw(st.booleans())
    ]
    return Digraph.from_edges(nodes, edges)


def test_closure_examples(sample_graph):
    reach = transitive_closure(sample_graph)
    assert reach("2", "6")
    assert not reach("3", "4")
    assert all(reach(v, v) for v in SAMPLE_NODES)
    assert reach.reachable_from("3") == {"3", "5", "6"}


def test_closure_unknown_node_has_no_paths(sample_graph):
    assert not transitive_closure(sample_graph)("7", "1")


@given(dags())
def test_closure_matches_bfs(g):
    reach = transitive_closure(g)
    for u in g.nodes:
        expected = bfs_reach(g.nodes, g.edges, u)
        assert {v for v in g.nodes if reach(u, v)} == expected


@given(dags())
def test_closure_antisymmetric_on_dag(g):
    reach = transitive_closure(g)
    for u in g.nodes:
        for v in g.nodes:
            if u != v:
                assert not (reach(u, v) and reach(v, u))


def test_sample_orderings(sample_graph):
    assert all_topological_orderings(sample_graph) == [
        ("1", "2", "3", "4", "5", "6"),
        ("1", "2", "3", "5", "4", "6"),
        ("1", "2", "4", "3", "5", "6"),
    ]
    assert count_linear_extensions(sample_graph) == 3


def test_single_and_antichain():
    assert all_topological_orderings(Digraph.from_edges(["v"], [])) == [("v",)]
    antichain = Digraph.from_edges(["a", "b", "c"], [])
    orderings = all_topological_orderings(antichain)
    assert len(orderings) == 6 and len(set(orderings)) == 6
    assert count_linear_extensions(antichain) == 6


def test_cap_exceeded():
    antichain = Digraph.from_edges(["a", "b", "c", "d"], [])
    assert len(all_topological_orderings(antichain, cap=24)) == 24
    with pytest.raises(CapExceeded):
        all_topological_orderings(antichain, cap=23)


@given(dags())
def test_orderings_match_brute_force(g):
    got = all_topological_orderings(g)
    assert got == sorted(got)
    assert got == brute_orderings(g.nodes, g.edges)
    assert count_linear_extensions(g) == len(got)


def test_iteration_is_lazy():
    big = Digraph.from_edges([f"n{i:02d}" for i in range(20)], [])
    first = next(iter_topological_orderings(big))
    assert first == tuple(f"n{i:02d}" for i in range(20))


@pytest.mark.parametrize("n", [1, 5, 12])
def test_chain_and_antichain_counts(n):
    nodes = [f"{i:02d}" for i in range(n)]
    chain = Digraph.from_edges(nodes, list(zip(nodes, nodes[1:])))
    assert count_linear_extensions(chain) == 1
    assert count_linear_extensions(Digraph.from_edges(nodes, [])) == math.factorial(n)


def test_two_parallel_chains_of_eight():
    a = [f"a{i}" for i in range(8)]
    b = [f"b{i}" for i in range(8)]
    g = Digraph.from_edges(a + b, list(zip(a, a[1:])) + list(zip(b, b[1:])))
    assert count_linear_extensions(g) == math.comb(16, 8) == 12870


def test_count_limit():
    g = Digraph.from_edges([f"{i:02d}" for i in range(25)], [])
    with pytest.raises(TooLarge):
        count_linear_extensions(g)


def test_mvc_examples(backend):
    star = Digraph.from_edges(["2", "3", "4", "5"], [("2", "3"), ("2", "4"), ("2", "5")])
    assert minimum_vertex_cover(star) == {"2"}
    assert minimum_vertex_cover(Digraph.from_edges(["a", "b"], [])) == set()
    triangle = Digraph.from_edges("abc", [("a", "b"), ("b", "c"), ("c", "a")])
    assert minimum_vertex_cover(triangle) == {"a", "b"}


@st.composite
def graphs(draw, max_nodes=10):
    n = draw(st.integers(0, max_nodes))
    nodes = [f"v{i}" for i in range(n)]
    pairs = [(nodes[i], nodes[j]) for i in range(n) for j in range(n) if i != j]
    edges = draw(st.lists(st.sampled_from(pairs), max_size=15, unique=True)) if pairs else []
    return Digraph.from_edges(nodes, edges)


@settings(max_examples=150)
@given(graphs())
def test_mvc_is_minimal_and_lexicographic(g):
    cover = minimum_vertex_cover(g)
    assert all(u in cover or v in cover for u, v in g.edges)
    assert cover == brute_mvc(g.edges)


def test_mvc_on_random_graphs_up_to_12_nodes(backend):
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 12)
        nodes = [f"{i:02d}" for i in range(n)]
        edges = [(u, v) for u in nodes for v in nodes if u < v and rng.random() < 0.3]
        g = Digraph.from_edges(nodes, edges)
        assert minimum_vertex_cover(g) == brute_mvc(edges)
