import pytest
from hypothesis import assume, given

from cotransversal import oracle
from cotransversal.errors import InvalidInputError, NoTransversalError
from cotransversal.instances import CHAIN_SDRS, ex_a, ex_g, ex_m_dual
from cotransversal.planted import PlantedGraph, enumerate_bases
from cotransversal.transversal import (
    TransversalPresentation,
    all_sdrs,
    dragon_condition,
    dualize,
    enumerate_transversals,
    find_sdr,
    hall_violator,
    hamming,
    is_sdr,
    sdr_exchange_path,
    sdr_exchange_step,
    sdr_exchange_walk,
    undualize,
)

from conftest import families, planted_graphs
from oracles import brute_dragon, brute_transversals

T = TransversalPresentation.build


def test_enumerate_transversals_examples():
    assert oracle.equal(enumerate_transversals(ex_a()), ex_m_dual())
    assert enumerate_transversals(T("12", ["1", "2"])).bases == {frozenset("12")}
    with pytest.raises(NoTransversalError) as err:
        enumerate_transversals(T("12", ["1", "1"]))
    assert err.value.violator == (0, 1)


def test_find_sdr():
    assert find_sdr(ex_a()) == ("1", "2", "3")
    assert find_sdr(T("12", ["1", "2"])) == ("1", "2")
    assert find_sdr(T("12", ["1", "1"])) is None
    assert find_sdr(T("1", [])) == ()


def test_dragon_condition_examples():
    assert dragon_condition(ex_a())
    assert not dragon_condition(T("1", ["1"]))
    assert dragon_condition(T("1", []))


def test_dualize_examples():
    p, m = dualize(ex_g())
    assert p == ex_a() and m == ("1", "2", "3")
    p, m = dualize(PlantedGraph.build("123", [], "123"))
    assert p.sets == () and m == ()
    p, m = dualize(PlantedGraph.build("12", [("1", "2")], "2"))
    assert p.sets == (frozenset("12"),) and m == ("1",)


def test_undualize_examples():
    assert undualize(ex_a(), CHAIN_SDRS[0]) == ex_g()
    third = undualize(ex_a(), CHAIN_SDRS[2])
    assert third.sinks == {"1", "4", "6"}
    assert third.edges == {
        ("3", "1"), ("3", "2"), ("3", "4"), ("3", "5"), ("3", "6"),
        ("2", "4"), ("2", "5"), ("5", "3"), ("5", "6"),
    }
    assert undualize(T("12", ["12"]), ("1",)) == PlantedGraph.build("12", [("1", "2")], "2")
    with pytest.raises(InvalidInputError):
        undualize(ex_a(), ("1", "1", "3"))


def test_exchange_path_chain():
    assert sdr_exchange_path(ex_a(), CHAIN_SDRS[0], CHAIN_SDRS[2]) == list(CHAIN_SDRS)
    assert sdr_exchange_path(ex_a(), CHAIN_SDRS[0], CHAIN_SDRS[0]) == [CHAIN_SDRS[0]]
    assert sdr_exchange_path(ex_a(), CHAIN_SDRS[0], CHAIN_SDRS[1]) == list(CHAIN_SDRS[:2])


def test_exchange_path_requires_dragon():
    with pytest.raises(InvalidInputError):
        sdr_exchange_path(T("12", ["1", "2"]), ("1", "2"), ("1", "2"))


def test_exchange_step_case_one():
    mb, mc = sdr_exchange_step(ex_a(), ("1", "2", "3"), ("3", "2", "5"))
    assert mb == ("1", "2", "3")
    assert mc == ("1", "2", "5")


def test_exchange_step_single_difference():
    mb, mc = sdr_exchange_step(ex_a(), ("1", "2", "3"), ("1", "2", "5"))
    assert mb == mc


def test_exchange_step_case_two_unused_element():
    p = T("123", ["123", "123"])
    mb, mc = sdr_exchange_step(p, ("1", "2"), ("2", "1"))
    assert (mb, mc) == (("3", "2"), ("3", "1"))
    assert hamming(mb, mc) == 1


def test_exchange_step_zigzag():
    # positions 0 and 1 trade {1, 2}; the only free element 4 hangs off the
    # common position 2, so the step must reroute 2 -> 4 and 0 -> 3
    p = T("1234", ["123", "12", "34"])
    assert dragon_condition(p)
    mb, mc = sdr_exchange_step(p, ("1", "2", "3"), ("2", "1", "3"))
    assert mb == ("3", "2", "4") and mc == ("3", "1", "4")
    walk = sdr_exchange_walk(p, ("1", "2", "3"), ("2", "1", "3"))
    assert walk[0] == ("1", "2", "3") and walk[-1] == ("2", "1", "3")
    assert all(hamming(a, b) == 1 for a, b in zip(walk, walk[1:]))
    assert all(is_sdr(p, m) for m in walk)


@given(planted_graphs(max_vertices=6))
def test_round_trip_from_graph(g):
    p, m = dualize(g)
    assert undualize(p, m) == g
    assert oracle.equal(enumerate_transversals(p), oracle.dual(enumerate_bases(g)))


@given(families())
def test_round_trip_from_family(p):
    m = find_sdr(p)
    assume(m is not None)
    p2, m2 = dualize(undualize(p, m))
    assert p2.multiset() == p.multiset()
    assert set(m2) == set(m)


@given(families())
def test_transversals_and_hall(p):
    brute = brute_transversals(p)
    assert (find_sdr(p) is not None) == bool(brute)
    if brute:
        m = enumerate_transversals(p)
        assert set(m.bases) == brute
        assert oracle.check_exchange_axiom(m)
    else:
        violator = hall_violator(p)
        union = frozenset().union(*(p.sets[i] for i in violator))
        assert len(union) < len(violator)


@given(families())
def test_dragon_matches_brute_force(p):
    assert dragon_condition(p) == brute_dragon(p)


@given(families())
def test_exchange_graph_connected_and_steps_reduce(p):
    assume(dragon_condition(p))
    sdrs = all_sdrs(p)
    assume(sdrs)
    start = sdrs[0]
    for target in sdrs:
        path = sdr_exchange_path(p, start, target)
        assert path[0] == start and path[-1] == target
        assert all(is_sdr(p, m) for m in path)
        assert all(hamming(a, b) == 1 for a, b in zip(path, path[1:]))
        walk = sdr_exchange_walk(p, target, start)
        assert walk[0] == target and walk[-1] == start
        assert all(is_sdr(p, m) for m in walk)
        assert all(hamming(a, b) == 1 for a, b in zip(walk, walk[1:]))
        if target != start:
            mb, mc = sdr_exchange_step(p, start, target)
            assert is_sdr(p, mb) and is_sdr(p, mc)
            assert hamming(mb, mc) < hamming(start, target)
