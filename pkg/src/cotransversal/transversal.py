"""Transversal presentations, SDRs and their duality with planted graphs.

An SDR is a plain tuple of labels, position ``i`` representing set ``i``.
"""
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidInputError, InvariantViolation, NoTransversalError, SizeLimitError
from .labels import sorted_labels
from .oracle import BasisSet
from .planted import PlantedGraph, require_valid, size_limit


@dataclass(frozen=True)
class TransversalPresentation:
    ground: frozenset
    sets: tuple

    @classmethod
    def build(cls, ground, sets):
        return cls(frozenset(str(x) for x in ground), tuple(frozenset(str(x) for x in s) for s in sets))

    def __post_init__(self):
        object.__setattr__(self, "ground", frozenset(self.ground))
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))
        for i, s in enumerate(self.sets):
            if not s <= self.ground:
                raise InvalidInputError(f"set {i} has non-ground elements {sorted_labels(s - self.ground)}")

    def __len__(self):
        return len(self.sets)

    def multiset(self):
        """The family as an index-free sorted list, for multiset comparison."""
        return sorted(tuple(sorted_labels(s)) for s in self.sets)


def is_sdr(p, m):
    m = tuple(m)
    return len(m) == len(p.sets) and len(set(m)) == len(m) and all(a in s for a, s in zip(m, p.sets))


def require_sdr(p, m):
    m = tuple(str(a) for a in m)
    if not is_sdr(p, m):
        raise InvalidInputError(f"{m} is not an SDR of the family")
    return m


def hamming(m1, m2):
    return sum(a != b for a, b in zip(m1, m2))


def _matching(sets, order):
    """Augmenting-path bipartite matching; returns (rep per set or None, match map)."""
    owner = {}

    def augment(i, seen):
        for x in order[i]:
            if x in seen:
                continue
            seen.add(x)
            if x not in owner or augment(owner[x], seen):
                owner[x] = i
                return True
        return False

    for i in range(len(sets)):
        augment(i, set())
    reps = [None] * len(sets)
    for x, i in owner.items():
        reps[i] = x
    return reps, owner


def _hall_violator(p, reps, owner):
    """Indices reachable by alternating paths from an unmatched set; their
    union is one element short of their count."""
    start = reps.index(None)
    tops = {start}
    queue = deque([start])
    while queue:
        i = queue.popleft()
        for x in p.sets[i]:
            j = owner.get(x)
            if j is not None and j not in tops:
                tops.add(j)
                queue.append(j)
    return tuple(sorted(tops))


def find_sdr(p):
    order = [sorted_labels(s) for s in p.sets]
    reps, _ = _matching(p.sets, order)
    if None in reps:
        return None
    return tuple(reps)


def hall_violator(p):
    """A Hall-violating index tuple, or None when an SDR exists."""
    order = [sorted_labels(s) for s in p.sets]
    reps, owner = _matching(p.sets, order)
    if None not in reps:
        return None
    return _hall_violator(p, reps, owner)


def _has_sdr(sets):
    order = [sorted(s) for s in sets]
    reps, _ = _matching(sets, order)
    return None not in reps


def enumerate_transversals(p, limit=None):
    violator = hall_violator(p)
    if violator is not None:
        raise NoTransversalError(f"no SDR exists: sets {list(violator)} violate Hall's condition", violator)
    limit = size_limit() if limit is None else limit
    if len(p.ground) > limit:
        raise SizeLimitError(f"refusing to enumerate transversals on {len(p.ground)} elements (limit {limit})")
    r = len(p.sets)
    bases = []
    for c in combinations(sorted_labels(p.ground), r):
        cs = set(c)
        if _has_sdr([s & cs for s in p.sets]):
            bases.append(frozenset(c))
    return BasisSet(p.ground, bases)


def dragon_condition(p):
    """Every k >= 1 of the sets jointly cover at least k + 1 elements."""
    r = len(p.sets)
    if r > 20:
        raise SizeLimitError(f"refusing to check {2 ** r} index subsets")
    for k in range(1, r + 1):
        for idx in combinations(range(r), k):
            if len(frozenset().union(*(p.sets[i] for i in idx))) < k + 1:
                return False
    return True


def dualize(g):
    """Planted graph -> (family, SDR): one set ``{i} | out(i)`` per non-sink i."""
    require_valid(g)
    sets = tuple(frozenset({v, *g.out_neighbors(v)}) for v in g.non_sinks)
    return TransversalPresentation(g.vertices, sets), tuple(g.non_sinks)


def undualize(p, m):
    """(family, SDR) -> planted graph with edges ``a_j -> x`` for ``x`` in ``A_j``."""
    m = require_sdr(p, m)
    edges = frozenset((a, x) for a, s in zip(m, p.sets) for x in s if x != a)
    return PlantedGraph(p.ground, edges, p.ground - frozenset(m))


def sdr_neighbors(p, m):
    """SDRs differing from ``m`` in exactly one position, canonically ordered."""
    used = set(m)
    out = []
    for i, s in enumerate(p.sets):
        for d in sorted_labels(s - used):
            out.append(m[:i] + (d,) + m[i + 1:])
    return out


def all_sdrs(p):
    r = len(p.sets)
    found = []

    def extend(prefix, used):
        if len(prefix) == r:
            found.append(tuple(prefix))
            return
        for x in sorted_labels(p.sets[len(prefix)] - used):
            prefix.append(x)
            extend(prefix, used | {x})
            prefix.pop()

    extend([], frozenset())
    return found


def _check_exchange_inputs(p, m1, m2):
    m1, m2 = require_sdr(p, m1), require_sdr(p, m2)
    if not dragon_condition(p):
        raise InvalidInputError("family does not satisfy the dragon marriage condition")
    return m1, m2


def sdr_exchange_path(p, m1, m2):
    """Shortest chain of single-position exchanges from ``m1`` to ``m2`` (BFS)."""
    m1, m2 = _check_exchange_inputs(p, m1, m2)
    parent = {m1: None}
    queue = deque([m1])
    while queue:
        m = queue.popleft()
        if m == m2:
            path = []
            while m is not None:
                path.append(m)
                m = parent[m]
            return path[::-1]
        for nb in sdr_neighbors(p, m):
            if nb not in parent:
                parent[nb] = m
                queue.append(nb)
    raise InvariantViolation(f"SDRs {m1} and {m2} are disconnected despite the dragon condition")


def _replace(m, i, x):
    return m[:i] + (x,) + m[i + 1:]


def _exchange_moves(p, mb, mc):
    """One reduction step, returned as two lists of single-position moves.

    The first list walks from ``mb`` to ``mb'``, the second from ``mc`` to
    ``mc'``; each entry is the SDR after one exchange.
    """
    r = len(mb)
    diff = [i for i in range(r) if mb[i] != mc[i]]
    if not diff:
        raise InvalidInputError("SDRs are already equal")
    in_c = set(mc)
    # representative sets differ: copy an element of mb missing from mc
    for i in range(r):
        if mb[i] not in in_c:
            return [], [_replace(mc, i, mb[i])]
    used = set(mb)
    # same representative set: an unused element fits a differing position
    for i in diff:
        free = sorted_labels(p.sets[i] - used)
        if free:
            d = free[0]
            return [_replace(mb, i, d)], [_replace(mc, i, d)]
    # zigzag: from a differing position, alternate through commonly matched
    # pairs until an element used by neither SDR is reached
    common_owner = {mb[i]: i for i in range(r) if mb[i] == mc[i]}
    parent = {}
    queue = deque()
    for j in diff:
        parent[("top", j)] = None
        queue.append(j)
    end = None
    while queue and end is None:
        t = queue.popleft()
        for x in sorted_labels(p.sets[t]):
            if x not in used:
                end = (t, x)
                break
            owner = common_owner.get(x)
            if owner is None or ("top", owner) in parent:
                continue
            parent[("top", owner)] = (t, x)
            queue.append(owner)
    if end is None:
        raise InvariantViolation("no zigzag path ends at an unused element")
    # rematch from the free end backwards so every move is a legal exchange
    relinks = []
    t, x = end
    while True:
        relinks.append((t, x))
        step = parent[("top", t)]
        if step is None:
            break
        t, x = step
    moves_b, moves_c = [], []
    cur_b, cur_c = mb, mc
    for t, x in relinks:
        cur_b = _replace(cur_b, t, x)
        cur_c = _replace(cur_c, t, x)
        moves_b.append(cur_b)
        moves_c.append(cur_c)
    return moves_b, moves_c


def sdr_exchange_step(p, mb, mc):
    """Return ``(mb', mc')`` with strictly smaller Hamming distance, each
    reachable from its predecessor by single-position exchanges."""
    mb, mc = _check_exchange_inputs(p, mb, mc)
    moves_b, moves_c = _exchange_moves(p, mb, mc)
    nb = moves_b[-1] if moves_b else mb
    nc = moves_c[-1] if moves_c else mc
    if hamming(nb, nc) >= hamming(mb, mc):
        raise InvariantViolation(f"exchange step failed to reduce distance between {mb} and {mc}")
    return nb, nc


def sdr_exchange_walk(p, m1, m2):
    """Exchange path built from repeated constructive steps (no search)."""
    m1, m2 = _check_exchange_inputs(p, m1, m2)
    front, back = [m1], [m2]
    while front[-1] != back[-1]:
        before = hamming(front[-1], back[-1])
        moves_b, moves_c = _exchange_moves(p, front[-1], back[-1])
        front.extend(moves_b)
        back.extend(moves_c)
        if hamming(front[-1], back[-1]) >= before:
            raise InvariantViolation("exchange step failed to reduce distance")
    return front + back[-2::-1]
