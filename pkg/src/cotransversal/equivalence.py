"""Deciding whether two planted graphs present the same cotransversal matroid.

Two presentations agree exactly when their saturations are linked by swaps.
The witness is built on the transversal side: both saturations dualize to
the same maximal family with different SDRs, and single-position SDR
exchanges translate into swaps.
"""
from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import permutations, product

from .errors import InvalidInputError, InvariantViolation, PartialResultError
from .planted import PlantedGraph, loops, require_valid, swap, valid_swaps
from .saturation import saturate
from .transversal import TransversalPresentation, dragon_condition, dualize, sdr_exchange_path


@dataclass(frozen=True)
class SwapSequence:
    steps: tuple = ()

    def __len__(self):
        return len(self.steps)

    def replay(self, g):
        """Apply every step; raises SwapNotApplicable on an illegal step."""
        for i, j in self.steps:
            g = swap(g, i, j)
        return g


@dataclass
class SwapGraph:
    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    # swaps whose result was not already saturated
    resaturated: int = 0

    def adjacency(self):
        adj = {i: set() for i in range(len(self.nodes))}
        for a, b, _ in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def is_connected(self):
        if not self.nodes:
            return True
        adj = self.adjacency()
        seen = {0}
        queue = deque([0])
        while queue:
            for b in adj[queue.popleft()]:
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return len(seen) == len(self.nodes)


def _check_pair(g1, g2):
    require_valid(g1)
    require_valid(g2)


def maximal_dual_family(g):
    """Saturate and dualize: (family, SDR) of the unique maximal presentation."""
    return dualize(saturate(g))


def same_matroid(g1, g2):
    _check_pair(g1, g2)
    if g1.vertices != g2.vertices or len(g1.sinks) != len(g2.sinks):
        return False
    f1, _ = maximal_dual_family(g1)
    f2, _ = maximal_dual_family(g2)
    return Counter(f1.sets) == Counter(f2.sets)


def _align(f1, m1, f2, m2):
    """Reindex (f2, m2) onto f1's set order, pairing identical (set, rep)
    entries first so positions that already agree stay put."""
    pool = list(zip(f2.sets, m2))
    target = [None] * len(f1.sets)
    for i, (s, a) in enumerate(zip(f1.sets, m1)):
        if (s, a) in pool:
            pool.remove((s, a))
            target[i] = a
    for i, s in enumerate(f1.sets):
        if target[i] is None:
            k = next(k for k, (t, _) in enumerate(pool) if t == s)
            target[i] = pool.pop(k)[1]
    return tuple(target)


def swap_path(g1, g2):
    """Swaps turning ``saturate(g1)`` into ``saturate(g2)``, or None when the
    two graphs present different matroids."""
    if not same_matroid(g1, g2):
        return None
    s1, s2 = saturate(g1), saturate(g2)
    f1, m1 = dualize(s1)
    f2, m2 = dualize(s2)
    target = _align(f1, m1, f2, m2)

    # matroid loops carry identical complete subgraphs in both saturations,
    # so only the non-loop positions need exchanging
    loop_set = loops(s1)
    keep = [i for i, a in enumerate(m1) if a not in loop_set]
    for i, a in enumerate(m1):
        if a in loop_set and target[i] != a:
            raise InvariantViolation(f"loop {a} is matched differently in the two saturations")
    core = TransversalPresentation(
        f1.ground - loop_set, tuple(f1.sets[i] - loop_set for i in keep)
    )
    if not dragon_condition(core):
        raise InvariantViolation("non-loop part of the maximal family violates the dragon condition")
    chain = sdr_exchange_path(core, tuple(m1[i] for i in keep), tuple(target[i] for i in keep))

    steps = []
    for before, after in zip(chain, chain[1:]):
        (pos,) = [k for k in range(len(before)) if before[k] != after[k]]
        steps.append((before[pos], after[pos]))
    witness = SwapSequence(tuple(steps))
    if witness.replay(s1) != s2:
        raise InvariantViolation("swap witness does not reproduce the second saturation")
    return witness


def swap_graph(g, limit=1000):
    """All labeled saturated presentations reachable from ``g`` by swaps."""
    if limit < 1:
        raise InvalidInputError("limit must be positive")
    start = saturate(g)
    result = SwapGraph(nodes=[start])
    index = {start: 0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        node = result.nodes[u]
        for i, j in valid_swaps(node):
            h = swap(node, i, j)
            sat = saturate(h)
            if sat != h:
                result.resaturated += 1
            if sat not in index:
                if len(result.nodes) >= limit:
                    raise PartialResultError(
                        f"swap graph exceeds {limit} nodes", result
                    )
                index[sat] = len(result.nodes)
                result.nodes.append(sat)
                queue.append(index[sat])
            result.edges.append((u, index[sat], (i, j)))
    return result


def _invariant(g, v):
    indeg = sum(1 for _, b in g.edges if b == v)
    return (v in g.sinks, len(g.out_neighbors(v)), indeg)


def canonical_form(g):
    """Isomorphism-invariant serialization of a planted graph.

    Vertices are grouped by (is sink, out-degree, in-degree) and only
    permutations inside each group are tried.
    """
    groups = {}
    for v in g.ordered_vertices:
        groups.setdefault(_invariant(g, v), []).append(v)
    keys = sorted(groups)
    signature = tuple((key, len(groups[key])) for key in keys)
    best = None
    for choice in product(*(permutations(groups[key]) for key in keys)):
        position = {}
        for block in choice:
            for v in block:
                position[v] = len(position)
        code = tuple(sorted((position[a], position[b]) for a, b in g.edges))
        if best is None or code < best:
            best = code
    return signature, best


def isomorphism_classes(graphs):
    graphs = list(graphs)
    if len({len(g.vertices) for g in graphs}) > 1:
        raise InvalidInputError("graphs must have the same number of vertices")
    classes = {}
    for idx, g in enumerate(graphs):
        classes.setdefault(canonical_form(g), []).append(idx)
    return sorted(classes.values())


def relabel(g, mapping):
    return PlantedGraph(
        frozenset(mapping[v] for v in g.vertices),
        frozenset((mapping[a], mapping[b]) for a, b in g.edges),
        frozenset(mapping[b] for b in g.sinks),
    )
