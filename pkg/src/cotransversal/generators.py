"""Random planted graphs and set families for property tests and scripts."""
import random
from dataclasses import dataclass

from .labels import sorted_labels
from .planted import PlantedGraph
from .transversal import TransversalPresentation


def random_planted_graph(rng, n, edge_prob=0.4, n_sinks=None):
    """Valid planted graph on labels "1".."n"; only non-sinks get out-edges."""
    vertices = [str(i) for i in range(1, n + 1)]
    if n_sinks is None:
        n_sinks = rng.randint(0, n)
    sinks = set(rng.sample(vertices, n_sinks))
    edges = {
        (a, b)
        for a in vertices
        if a not in sinks
        for b in vertices
        if b != a and rng.random() < edge_prob
    }
    return PlantedGraph(frozenset(vertices), frozenset(edges), frozenset(sinks))


def planted_corpus(seed, count, max_vertices=7, min_vertices=1):
    rng = random.Random(seed)
    return [
        random_planted_graph(rng, rng.randint(min_vertices, max_vertices), rng.uniform(0.15, 0.7))
        for _ in range(count)
    ]


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = 0
    count: int = 200
    min_vertices: int = 1
    max_vertices: int = 7

    def build(self):
        return planted_corpus(self.seed, self.count, self.max_vertices, self.min_vertices)


def random_family(rng, r, s, prob=0.5):
    ground = [str(i) for i in range(1, s + 1)]
    sets = [frozenset(x for x in ground if rng.random() < prob) for _ in range(r)]
    return TransversalPresentation(frozenset(ground), tuple(sets))


def relabelling(rng, g):
    labels = sorted_labels(g.vertices)
    shuffled = labels[:]
    rng.shuffle(shuffled)
    return dict(zip(labels, shuffled))
