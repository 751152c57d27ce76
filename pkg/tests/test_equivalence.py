import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cotransversal import oracle
from cotransversal.equivalence import (
    SwapSequence,
    isomorphism_classes,
    relabel,
    same_matroid,
    swap_graph,
    swap_path,
)
from cotransversal.errors import PartialResultError
from cotransversal.generators import relabelling
from cotransversal.instances import ex_g, ex_r2, ex_r2_matroid, chain_graphs
from cotransversal.planted import PlantedGraph, enumerate_bases, swap, valid_swaps
from cotransversal.saturation import is_saturated, saturate

from conftest import planted_graphs

TWO_SINKS = PlantedGraph.build(range(1, 7), [(1, 4), (2, 5), (3, 4)], [4, 5])


def test_same_matroid_examples():
    first, second, third = chain_graphs()
    assert same_matroid(first, third)
    assert same_matroid(first, second)
    smaller = ex_g().without_edges([("2", "4")])
    assert same_matroid(ex_g(), smaller) is False
    assert not same_matroid(ex_g(), TWO_SINKS)


def test_same_matroid_vertex_sets_differ():
    a = PlantedGraph.build("12", [], "12")
    b = PlantedGraph.build("13", [], "13")
    assert not same_matroid(a, b)


def test_swap_path_chain():
    first, _, third = chain_graphs()
    seq = swap_path(first, third)
    assert seq == SwapSequence((("3", "5"), ("1", "3")))
    assert seq.replay(first) == third
    assert swap(first, "3", "5") == chain_graphs()[1]


def test_swap_path_trivial_and_negative():
    assert swap_path(ex_g(), ex_g()) == SwapSequence(())
    assert swap_path(ex_g(), TWO_SINKS) is None


def test_swap_graph_ex_r2():
    sg = swap_graph(ex_r2())
    assert len(sg.nodes) == 9
    assert sg.is_connected()
    assert len(isomorphism_classes(sg.nodes)) == 2
    for node in sg.nodes:
        assert is_saturated(node)
        assert oracle.equal(enumerate_bases(node), ex_r2_matroid())


def test_swap_graph_ex_g_contains_chain():
    sg = swap_graph(ex_g())
    assert sg.is_connected()
    for g in chain_graphs():
        assert g in sg.nodes


def test_swap_graph_trivial():
    g = PlantedGraph.build("123", [], "123")
    sg = swap_graph(g)
    assert sg.nodes == [g] and sg.edges == []


def test_swap_graph_limit():
    with pytest.raises(PartialResultError) as err:
        swap_graph(ex_r2(), limit=4)
    assert len(err.value.partial.nodes) == 4


def test_swap_graph_symmetry():
    sg = swap_graph(ex_r2())
    labelled = {(a, b, lab) for a, b, lab in sg.edges}
    for a, b, (i, j) in sg.edges:
        assert (b, a, (j, i)) in labelled
        assert swap(sg.nodes[a], i, j) == sg.nodes[b]


def test_isomorphism_classes_examples():
    rng = random.Random(3)
    g = ex_g()
    assert isomorphism_classes([g, relabel(g, relabelling(rng, g))]) == [[0, 1]]
    trivial = PlantedGraph.build(range(1, 7), [], range(1, 7))
    assert isomorphism_classes([g, trivial]) == [[0], [1]]


def to_nx(g):
    d = nx.DiGraph()
    for v in g.vertices:
        d.add_node(v, sink=v in g.sinks)
    d.add_edges_from(g.edges)
    return d


@given(planted_graphs(max_vertices=5), planted_graphs(max_vertices=5))
def test_isomorphism_agrees_with_networkx(g, h):
    if len(g.vertices) != len(h.vertices):
        return
    classes = isomorphism_classes([g, h])
    iso = nx.is_isomorphic(to_nx(g), to_nx(h), node_match=lambda a, b: a["sink"] == b["sink"])
    assert (len(classes) == 1) == iso


@given(planted_graphs(max_vertices=6), st.randoms(use_true_random=False))
def test_equivalent_presentations_are_linked(g, rng):
    # build a second presentation of the same matroid by random swaps
    h = g
    for _ in range(4):
        options = valid_swaps(h)
        if not options:
            break
        h = swap(h, *rng.choice(options))
    assert same_matroid(g, h)
    seq = swap_path(g, h)
    assert seq is not None
    assert seq.replay(saturate(g)) == saturate(h)


@given(planted_graphs(max_vertices=5, min_vertices=5), planted_graphs(max_vertices=5, min_vertices=5))
def test_decision_agrees_with_oracle(g, h):
    truth = oracle.equal(enumerate_bases(g), enumerate_bases(h))
    assert same_matroid(g, h) == truth
    seq = swap_path(g, h)
    assert (seq is not None) == truth
    if seq is not None:
        assert seq.replay(saturate(g)) == saturate(h)


@given(planted_graphs(max_vertices=5))
def test_swap_graph_nodes_share_matroid(g):
    sg = swap_graph(g)
    m = enumerate_bases(g)
    assert sg.is_connected()
    index = {node: k for k, node in enumerate(sg.nodes)}
    for node in sg.nodes:
        assert oracle.equal(enumerate_bases(node), m)
        for i, j in valid_swaps(node):
            assert saturate(swap(node, i, j)) in index
