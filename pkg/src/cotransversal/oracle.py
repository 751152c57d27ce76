"""Explicit matroids given by their full list of bases.

Everything here is brute force on purpose: these routines are the ground
truth the routing, saturation and equivalence code is checked against.
"""
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidInputError
from .labels import set_key, sorted_labels


@dataclass(frozen=True)
class BasisSet:
    ground: frozenset
    bases: frozenset

    def __post_init__(self):
        object.__setattr__(self, "ground", frozenset(self.ground))
        object.__setattr__(self, "bases", frozenset(frozenset(b) for b in self.bases))
        if not self.bases:
            raise InvalidInputError("a matroid needs at least one basis")
        sizes = {len(b) for b in self.bases}
        if len(sizes) != 1:
            raise InvalidInputError(f"bases have differing sizes {sorted(sizes)}")
        for b in self.bases:
            if not b <= self.ground:
                extra = sorted_labels(b - self.ground)
                raise InvalidInputError(f"basis contains non-ground elements {extra}")

    @property
    def rank(self):
        return len(next(iter(self.bases)))

    def sorted_bases(self):
        """Bases as sorted label lists, in canonical order."""
        return [sorted_labels(b) for b in sorted(self.bases, key=set_key)]

    def is_independent(self, subset):
        subset = frozenset(subset)
        return any(subset <= b for b in self.bases)

    def rank_of(self, subset):
        subset = frozenset(subset)
        return max(len(subset & b) for b in self.bases)


def uniform(ground, rank):
    ground = frozenset(ground)
    return BasisSet(ground, [frozenset(c) for c in combinations(ground, rank)])


def check_exchange_axiom(m):
    for ba in m.bases:
        for bb in m.bases:
            for x in ba - bb:
                rest = ba - {x}
                if not any(rest | {y} in m.bases for y in bb - ba):
                    return False
    return True


def dual(m):
    return BasisSet(m.ground, [m.ground - b for b in m.bases])


def max_independent_subsets(m, k):
    """All maximum-size independent subsets of ``k``, canonically ordered."""
    k = frozenset(k)
    r = m.rank_of(k)
    found = {frozenset(c) for c in combinations(sorted_labels(k), r) if m.is_independent(c)}
    return sorted(found, key=set_key)


def greedy_independent_subset(m, k):
    chosen = frozenset()
    for x in sorted_labels(k):
        if m.is_independent(chosen | {x}):
            chosen = chosen | {x}
    return chosen


def contract(m, k, basis_of_k=None):
    """Contraction ``m / k``.

    ``basis_of_k`` selects the maximum independent subset of ``k`` to extend;
    by default it is picked greedily in canonical order.
    """
    k = frozenset(k)
    if not k <= m.ground:
        raise InvalidInputError(f"contraction set has non-ground elements {sorted_labels(k - m.ground)}")
    if basis_of_k is None:
        basis_of_k = greedy_independent_subset(m, k)
    basis_of_k = frozenset(basis_of_k)
    if len(basis_of_k) != m.rank_of(k) or not basis_of_k <= k or not m.is_independent(basis_of_k):
        raise InvalidInputError("basis_of_k is not a maximum independent subset of k")
    rest = m.ground - k
    bases = [b - basis_of_k for b in m.bases if basis_of_k <= b and not (b - basis_of_k) & k]
    return BasisSet(rest, bases)


def loops_and_coloops(m):
    union = frozenset().union(*m.bases)
    common = frozenset.intersection(*m.bases)
    return m.ground - union, common


def equal(m1, m2):
    return m1.ground == m2.ground and m1.bases == m2.bases
