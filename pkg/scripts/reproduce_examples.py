"""Print the worked examples: basis lists, the swap chain and the swap graph of ex_r2."""
from itertools import combinations

from cotransversal import oracle
from cotransversal.equivalence import isomorphism_classes, swap_graph, swap_path
from cotransversal.instances import ex_a, ex_g, ex_r2, chain_graphs
from cotransversal.labels import sorted_labels
from cotransversal.planted import enumerate_bases
from cotransversal.saturation import is_saturated
from cotransversal.transversal import enumerate_transversals


def missing_triples(m):
    every = {frozenset(c) for c in combinations(sorted(m.ground), 3)}
    return sorted(("".join(sorted(s)) for s in every - set(m.bases)))


def main():
    bases = enumerate_bases(ex_g())
    print(f"ex_g: {len(bases.bases)} bases, missing {missing_triples(bases)}")
    trans = enumerate_transversals(ex_a())
    print(f"ex_a: {len(trans.bases)} transversals, missing {missing_triples(trans)}")
    print(f"ex_a transversals equal dual of ex_g bases: {oracle.equal(trans, oracle.dual(bases))}")

    first, _, third = chain_graphs()
    print(f"chain presentations saturated: {[is_saturated(g) for g in chain_graphs()]}")
    print(f"swap witness first -> third: {list(swap_path(first, third).steps)}")

    sg = swap_graph(ex_r2())
    print(f"ex_r2 swap graph: {len(sg.nodes)} nodes, {len(sg.edges)} labelled edges, connected={sg.is_connected()}")
    classes = isomorphism_classes(sg.nodes)
    print(f"isomorphism classes: {classes}")
    for k, node in enumerate(sg.nodes):
        sinks = ",".join(sorted_labels(node.sinks))
        print(f"  p{k}: sinks {sinks}, {len(node.edges)} edges")


if __name__ == "__main__":
    main()
