"""Planted graphs, routings and the swap move.

A planted graph is a simple digraph (antiparallel pairs allowed) with a
distinguished set of sinks. Its cotransversal matroid has as bases the
``|B|``-subsets that can be linked onto the sinks by vertex-disjoint paths.
"""
import os
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import InvalidInputError, SizeLimitError, SwapNotApplicable
from .labels import sorted_labels, vertex_key
from .oracle import BasisSet

DEFAULT_SIZE_LIMIT = 20
SIZE_LIMIT_ENV = "COTRANSVERSAL_SIZE_LIMIT"


def size_limit():
    value = os.environ.get(SIZE_LIMIT_ENV)
    return int(value) if value else DEFAULT_SIZE_LIMIT


def _edge_key(edge):
    return (vertex_key(edge[0]), vertex_key(edge[1]))


@dataclass(frozen=True)
class PlantedGraph:
    vertices: frozenset
    edges: frozenset
    sinks: frozenset

    @classmethod
    def build(cls, vertices, edges, sinks):
        """Construct from arbitrary iterables, converting labels to strings."""
        return cls(
            frozenset(str(v) for v in vertices),
            frozenset((str(a), str(b)) for a, b in edges),
            frozenset(str(b) for b in sinks),
        )

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))
        object.__setattr__(self, "sinks", frozenset(self.sinks))

    @cached_property
    def ordered_vertices(self):
        return tuple(sorted_labels(self.vertices))

    @cached_property
    def ordered_edges(self):
        return tuple(sorted(self.edges, key=_edge_key))

    @cached_property
    def non_sinks(self):
        return tuple(v for v in self.ordered_vertices if v not in self.sinks)

    @cached_property
    def _successors(self):
        succ = {v: [] for v in self.vertices}
        for a, b in self.ordered_edges:
            succ.setdefault(a, []).append(b)
        return {v: tuple(ws) for v, ws in succ.items()}

    def out_neighbors(self, v):
        return self._successors.get(v, ())

    def with_edges(self, extra):
        return PlantedGraph(self.vertices, self.edges | frozenset(extra), self.sinks)

    def without_edges(self, removed):
        return PlantedGraph(self.vertices, self.edges - frozenset(removed), self.sinks)

    def __repr__(self):
        edges = " ".join(f"{a}>{b}" for a, b in self.ordered_edges)
        sinks = ",".join(sorted_labels(self.sinks))
        return f"PlantedGraph(V={','.join(self.ordered_vertices)}; E={edges}; B={sinks})"


@dataclass(frozen=True)
class Routing:
    paths: tuple

    def __len__(self):
        return len(self.paths)

    @property
    def sources(self):
        return frozenset(p[0] for p in self.paths)

    @property
    def targets(self):
        return frozenset(p[-1] for p in self.paths)


def validate(g):
    """List every violated planted-graph invariant; empty means valid."""
    problems = []
    for v in sorted_labels(g.vertices):
        if not v:
            problems.append("empty vertex label")
    for a, b in g.ordered_edges:
        if a == b:
            problems.append(f"self-edge at {a}")
        for end in (a, b):
            if end not in g.vertices:
                problems.append(f"edge ({a}, {b}) endpoint {end} is not a vertex")
    for b in sorted_labels(g.sinks):
        if b not in g.vertices:
            problems.append(f"sink {b} is not a vertex")
        if g.out_neighbors(b):
            problems.append(f"sink {b} has outgoing edge")
    return problems


def require_valid(g):
    problems = validate(g)
    if problems:
        raise InvalidInputError("invalid planted graph: " + "; ".join(problems))


def as_vertex_set(g, subset):
    subset = frozenset(str(v) for v in subset)
    unknown = subset - g.vertices
    if unknown:
        raise InvalidInputError(f"unknown vertices {sorted_labels(unknown)}")
    return subset


def is_valid_routing(g, routing):
    seen = set()
    ends = set()
    for path in routing.paths:
        if not path or path[-1] not in g.sinks or path[-1] in ends:
            return False
        ends.add(path[-1])
        for v in path:
            if v in seen or v not in g.vertices:
                return False
            seen.add(v)
        if any((a, b) not in g.edges for a, b in zip(path, path[1:])):
            return False
    return True


def find_routing(g, sources):
    """Maximum routing from ``sources`` to the sinks.

    Each vertex is split into an in-node and an out-node joined by a unit
    arc, so unit-capacity augmenting paths give vertex-disjoint routes.
    Sources that are sinks come out as one-vertex paths.
    """
    sources = as_vertex_set(g, sources)
    order = g.ordered_vertices
    idx = {v: i for i, v in enumerate(order)}
    n = len(order)
    src, dst = 2 * n, 2 * n + 1
    residual = [dict() for _ in range(2 * n + 2)]

    def arc(u, w):
        residual[u][w] = 1
        residual[w].setdefault(u, 0)

    for i in range(n):
        arc(2 * i, 2 * i + 1)
    for a, b in g.ordered_edges:
        arc(2 * idx[a] + 1, 2 * idx[b])
    for s in sorted_labels(sources):
        arc(src, 2 * idx[s])
    for b in sorted_labels(g.sinks):
        arc(2 * idx[b] + 1, dst)

    while True:
        parent = {src: None}
        queue = deque([src])
        while queue and dst not in parent:
            u = queue.popleft()
            for w, cap in residual[u].items():
                if cap and w not in parent:
                    parent[w] = u
                    queue.append(w)
        if dst not in parent:
            break
        w = dst
        while parent[w] is not None:
            u = parent[w]
            residual[u][w] -= 1
            residual[w][u] += 1
            w = u

    paths = []
    for s in sorted_labels(sources):
        if residual[src][2 * idx[s]]:
            continue
        path = [s]
        node = 2 * idx[s] + 1
        while residual[node].get(dst, 1):
            # follow the unique saturated original arc out of this out-node
            nxt = next(
                b for b in g.out_neighbors(order[node // 2]) if residual[node][2 * idx[b]] == 0
            )
            path.append(nxt)
            node = 2 * idx[nxt] + 1
        paths.append(tuple(path))
    return Routing(tuple(paths))


def rank(g, k):
    return len(find_routing(g, k))


def is_basis(g, a):
    a = as_vertex_set(g, a)
    return len(a) == len(g.sinks) and rank(g, a) == len(g.sinks)


def enumerate_bases(g, limit=None):
    require_valid(g)
    limit = size_limit() if limit is None else limit
    if len(g.vertices) > limit:
        raise SizeLimitError(
            f"refusing to enumerate bases on {len(g.vertices)} vertices (limit {limit}; "
            f"raise it with {SIZE_LIMIT_ENV})"
        )
    r = len(g.sinks)
    bases = [frozenset(c) for c in combinations(g.ordered_vertices, r) if rank(g, c) == r]
    return BasisSet(g.vertices, bases)


def loops(g):
    """Vertices with no directed path to any sink."""
    pred = {v: [] for v in g.vertices}
    for a, b in g.edges:
        pred.setdefault(b, []).append(a)
    reached = set(g.sinks & g.vertices)
    queue = deque(reached)
    while queue:
        v = queue.popleft()
        for u in pred.get(v, ()):
            if u not in reached:
                reached.add(u)
                queue.append(u)
    return g.vertices - reached


def swap(g, i, j):
    """Apply swap(i, j): reverse edge i->j, hand i's other out-edges to j, and
    make i a sink in place of j."""
    i, j = str(i), str(j)
    if i in g.sinks:
        raise SwapNotApplicable(f"swap({i}, {j}): {i} is a sink")
    if j not in g.sinks:
        raise SwapNotApplicable(f"swap({i}, {j}): {j} is not a sink")
    if (i, j) not in g.edges:
        raise SwapNotApplicable(f"swap({i}, {j}): edge ({i}, {j}) is absent")
    edges = set()
    for a, b in g.edges:
        if a != i:
            edges.add((a, b))
        elif b == j:
            edges.add((j, i))
        else:
            edges.add((j, b))
    return PlantedGraph(g.vertices, frozenset(edges), (g.sinks - {j}) | {i})


def valid_swaps(g):
    pairs = [(a, b) for a, b in g.ordered_edges if a not in g.sinks and b in g.sinks]
    return pairs
