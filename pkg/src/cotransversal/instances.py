"""The small worked instances used throughout the tests and scripts.

``ex_a`` is the set family {123456, 245, 356} on {1..6}; ``ex_g`` is the
planted graph it yields with representatives (1, 2, 3), sinks {4, 5, 6}.
``ex_r2`` presents the rank-2 matroid on {1..5} whose non-bases are the
pairs inside {1, 2, 3}.
"""
from itertools import combinations

from .oracle import BasisSet
from .planted import PlantedGraph
from .transversal import TransversalPresentation, undualize

CHAIN_SDRS = (("1", "2", "3"), ("1", "2", "5"), ("3", "2", "5"))


def ex_a():
    return TransversalPresentation.build(range(1, 7), [[1, 2, 3, 4, 5, 6], [2, 4, 5], [3, 5, 6]])


def ex_g():
    return undualize(ex_a(), CHAIN_SDRS[0])


def chain_graphs():
    return [undualize(ex_a(), m) for m in CHAIN_SDRS]


def _all_but(ground, rank, excluded):
    ground = [str(x) for x in ground]
    drop = {frozenset(str(x) for x in e) for e in excluded}
    return BasisSet(frozenset(ground), [frozenset(c) for c in combinations(ground, rank) if frozenset(c) not in drop])


def ex_m():
    return _all_but(range(1, 7), 3, ["245", "356"])


def ex_m_dual():
    return _all_but(range(1, 7), 3, ["124", "136"])


def ex_r2():
    # vertex 3 is a bottleneck through which 1 and 2 must pass
    return PlantedGraph.build(range(1, 6), [(1, 3), (2, 3), (3, 4), (3, 5)], [4, 5])


def ex_r2_matroid():
    return BasisSet(frozenset("12345"), [frozenset(b) for b in ["14", "15", "24", "25", "34", "35", "45"]])
