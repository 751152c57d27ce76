from itertools import combinations

import pytest
from hypothesis import given

from cotransversal import oracle
from cotransversal.errors import InvalidInputError
from cotransversal.instances import ex_m, ex_m_dual
from cotransversal.oracle import BasisSet
from cotransversal.planted import enumerate_bases

from conftest import planted_graphs


def bs(ground, bases):
    return BasisSet(frozenset(ground), [frozenset(b) for b in bases])


def test_basis_set_invariants():
    with pytest.raises(InvalidInputError):
        bs("12", [])
    with pytest.raises(InvalidInputError):
        bs("123", ["1", "23"])
    with pytest.raises(InvalidInputError):
        bs("12", ["13"])


def test_exchange_axiom_examples():
    assert oracle.check_exchange_axiom(ex_m())
    assert oracle.check_exchange_axiom(oracle.uniform("1234", 2))
    assert not oracle.check_exchange_axiom(bs("1234", ["12", "34"]))


def test_dual_of_example_one_is_example_two():
    assert oracle.equal(oracle.dual(ex_m()), ex_m_dual())
    assert oracle.equal(oracle.dual(oracle.dual(ex_m())), ex_m())
    assert oracle.dual(bs("123", ["123"])).bases == {frozenset()}


def test_contract_examples():
    by_one = oracle.contract(ex_m(), {"1"})
    assert oracle.equal(by_one, oracle.uniform("23456", 2))
    assert oracle.equal(oracle.contract(ex_m(), set()), ex_m())
    full = oracle.contract(ex_m(), ex_m().ground)
    assert full.ground == frozenset() and full.bases == {frozenset()}


def test_contract_rejects_bad_basis_choice():
    with pytest.raises(InvalidInputError):
        oracle.contract(ex_m(), {"1", "2"}, basis_of_k={"1"})


def test_loops_and_coloops():
    assert oracle.loops_and_coloops(ex_m()) == (frozenset(), frozenset())
    assert oracle.loops_and_coloops(bs("123", ["12"])) == ({"3"}, {"1", "2"})
    assert oracle.loops_and_coloops(oracle.uniform("1234", 2)) == (frozenset(), frozenset())


def test_equal():
    assert oracle.equal(ex_m(), ex_m())
    assert not oracle.equal(ex_m(), ex_m_dual())
    assert not oracle.equal(bs("12", ["1"]), bs("123", ["1"]))


def test_sorted_bases_canonical():
    m = bs(["10", "9", "2"], [["10", "9"], ["2", "10"], ["9", "2"]])
    assert m.sorted_bases() == [["2", "9"], ["2", "10"], ["9", "10"]]


@given(planted_graphs(max_vertices=6))
def test_dual_involution_and_axioms(g):
    m = enumerate_bases(g)
    assert oracle.check_exchange_axiom(m)
    d = oracle.dual(m)
    assert oracle.check_exchange_axiom(d)
    assert oracle.equal(oracle.dual(d), m)


@given(planted_graphs(max_vertices=6))
def test_contract_is_choice_independent(g):
    m = enumerate_bases(g)
    verts = sorted(g.vertices)
    for size in range(len(verts) + 1):
        for k in combinations(verts, size):
            results = {oracle.contract(m, k, bk) for bk in oracle.max_independent_subsets(m, k)}
            assert len(results) == 1
            (c,) = results
            assert oracle.check_exchange_axiom(c)
            loops_m, _ = oracle.loops_and_coloops(m)
            loops_c, _ = oracle.loops_and_coloops(c)
            assert loops_c >= loops_m - set(k)
