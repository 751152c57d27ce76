"""Claws, contraction presentations and saturation of planted graphs."""
from .errors import InvalidInputError
from .labels import sorted_labels
from .planted import PlantedGraph, as_vertex_set, find_routing, loops, require_valid, swap
from .transversal import TransversalPresentation, dualize, require_sdr, undualize


def claw(g, v):
    v = str(v)
    if v not in g.vertices:
        raise InvalidInputError(f"unknown vertex {v}")
    return frozenset({v, *g.out_neighbors(v)})


def sink_path_into(g, k):
    """A path from a non-sink of ``k`` to a sink outside ``k`` inside a maximum
    routing from ``k``, or None once ``k`` holds as many sinks as its rank."""
    routing = find_routing(g, k)
    if len(k & g.sinks) >= len(routing):
        return None
    for path in routing.paths:
        if path[-1] not in k:
            return path
    raise AssertionError("a maximum routing must leave k when k is short of sinks")


def swap_along(g, path):
    """Swap cascade from the sink end backwards: the path's start becomes a
    sink and its end stops being one."""
    for a, b in reversed(list(zip(path, path[1:]))):
        g = swap(g, a, b)
    return g


def pull_sinks_into(g, k):
    """Equivalent presentation in which ``k`` contains ``rank(k)`` sinks."""
    k = as_vertex_set(g, k)
    while True:
        path = sink_path_into(g, k)
        if path is None:
            return g
        g = swap_along(g, path)


def contract_presentation(g, k):
    """A planted graph on ``V - k`` presenting the contraction by ``k``."""
    k = as_vertex_set(g, k)
    if not k:
        return g
    h = pull_sinks_into(g, k)
    edges = frozenset((a, b) for a, b in h.edges if a not in k and b not in k)
    return PlantedGraph(h.vertices - k, edges, h.sinks - k)


def addable_targets(g, v):
    """All ``w`` outside the claw of ``v`` whose edge ``v -> w`` leaves the
    matroid unchanged: the loops of the contraction by the claw."""
    return loops(contract_presentation(g, claw(g, v)))


def can_add_edge(g, v, w):
    v, w = str(v), str(w)
    if v not in g.vertices or w not in g.vertices:
        raise InvalidInputError(f"unknown vertex in ({v}, {w})")
    if v in g.sinks:
        raise InvalidInputError(f"{v} is a sink")
    if v == w:
        raise InvalidInputError("self-edges are not allowed")
    if w in claw(g, v):
        raise InvalidInputError(f"edge ({v}, {w}) already present")
    return w in addable_targets(g, v)


def saturate(g, order=None):
    """Add every edge that keeps the cotransversal matroid unchanged.

    Non-sinks are processed in ``order`` (canonical by default) and passes
    repeat until nothing changes.
    """
    require_valid(g)
    order = list(g.non_sinks if order is None else (str(v) for v in order))
    if sorted_labels(order) != list(g.non_sinks):
        raise InvalidInputError("order must list every non-sink exactly once")
    changed = True
    while changed:
        changed = False
        for v in order:
            targets = addable_targets(g, v)
            if targets:
                g = g.with_edges((v, w) for w in targets)
                changed = True
    return g


def is_saturated(g):
    return saturate(g) == g


def maximal_transversal_presentation(p, m):
    """Unique maximal family containing ``p`` set by set with the same
    transversal matroid, computed through the saturated planted graph."""
    m = require_sdr(p, m)
    sat = saturate(undualize(p, m))
    family, reps = dualize(sat)
    by_rep = dict(zip(reps, family.sets))
    return TransversalPresentation(p.ground, tuple(by_rep[a] for a in m))
