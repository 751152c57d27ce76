"""JSON documents for graphs, presentations, matroids and swap graphs, plus
Graphviz DOT export.

Every emitter is canonical: equal objects give byte-identical text.
"""
import json

from .equivalence import SwapGraph
from .errors import InvalidInputError, ParseError
from .labels import sorted_labels, vertex_key
from .oracle import BasisSet
from .planted import PlantedGraph, validate
from .transversal import TransversalPresentation, is_sdr


def _dump(pairs):
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in pairs)
    return "{\n" + body + "\n}\n"


def _load(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level: expected a JSON object")
    return doc


def _label(value, where):
    # integers are accepted as a convenience; labels are strings internally
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(f"{where}: expected a vertex label, got {json.dumps(value)}")
    label = str(value)
    if not label:
        raise ParseError(f"{where}: empty vertex label")
    return label


def _labels(doc, key, where=None):
    where = where or key
    value = doc.get(key) if isinstance(doc, dict) else doc
    if not isinstance(value, list):
        raise ParseError(f"{where}: expected a list")
    out = [_label(x, f"{where}[{i}]") for i, x in enumerate(value)]
    if len(set(out)) != len(out):
        raise ParseError(f"{where}: duplicate labels")
    return out


def _require_keys(doc, required, optional=()):
    missing = [k for k in required if k not in doc]
    if missing:
        raise ParseError(f"missing field(s) {missing}")
    extra = sorted(set(doc) - set(required) - set(optional))
    if extra:
        raise ParseError(f"unknown field(s) {extra}")


# planted graphs

def planted_to_doc(g):
    return {
        "vertices": list(g.ordered_vertices),
        "edges": [list(e) for e in g.ordered_edges],
        "sinks": sorted_labels(g.sinks),
    }


def emit_planted(g):
    return _dump(planted_to_doc(g).items())


def planted_from_doc(doc, check=True, where="graph"):
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: expected a JSON object")
    _require_keys(doc, ("vertices", "edges", "sinks"))
    vertices = _labels(doc, "vertices", f"{where}.vertices")
    sinks = _labels(doc, "sinks", f"{where}.sinks")
    raw = doc["edges"]
    if not isinstance(raw, list):
        raise ParseError(f"{where}.edges: expected a list")
    edges = []
    for i, e in enumerate(raw):
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"{where}.edges[{i}]: expected a [from, to] pair")
        edges.append((_label(e[0], f"{where}.edges[{i}][0]"), _label(e[1], f"{where}.edges[{i}][1]")))
    if len(set(edges)) != len(edges):
        raise ParseError(f"{where}.edges: duplicate edge")
    g = PlantedGraph(frozenset(vertices), frozenset(edges), frozenset(sinks))
    if check:
        problems = validate(g)
        if problems:
            raise ParseError(f"{where}: " + "; ".join(problems))
    return g


def parse_planted(text, check=True):
    return planted_from_doc(_load(text), check=check)


# transversal presentations

def emit_presentation(p, sdr=None):
    pairs = [("ground", sorted_labels(p.ground)), ("sets", [sorted_labels(s) for s in p.sets])]
    if sdr is not None:
        pairs.append(("sdr", list(sdr)))
    return _dump(pairs)


def presentation_from_doc(doc):
    _require_keys(doc, ("ground", "sets"), ("sdr",))
    ground = _labels(doc, "ground")
    if not isinstance(doc["sets"], list):
        raise ParseError("sets: expected a list")
    sets = [_labels(s, None, f"sets[{i}]") for i, s in enumerate(doc["sets"])]
    try:
        p = TransversalPresentation(frozenset(ground), tuple(frozenset(s) for s in sets))
    except InvalidInputError as exc:
        raise ParseError(f"sets: {exc}") from None
    sdr = None
    if doc.get("sdr") is not None:
        sdr = tuple(_labels(doc, "sdr"))
        if not is_sdr(p, sdr):
            raise ParseError(f"sdr: {list(sdr)} is not a system of distinct representatives")
    return p, sdr


def parse_presentation(text):
    return presentation_from_doc(_load(text))


# explicit matroids

def emit_matroid(m):
    return _dump([("ground", sorted_labels(m.ground)), ("bases", m.sorted_bases())])


def matroid_from_doc(doc):
    _require_keys(doc, ("ground", "bases"))
    ground = _labels(doc, "ground")
    if not isinstance(doc["bases"], list):
        raise ParseError("bases: expected a list")
    bases = [_labels(b, None, f"bases[{i}]") for i, b in enumerate(doc["bases"])]
    try:
        return BasisSet(frozenset(ground), [frozenset(b) for b in bases])
    except InvalidInputError as exc:
        raise ParseError(f"bases: {exc}") from None


def parse_matroid(text):
    return matroid_from_doc(_load(text))


# swap graphs

def emit_swap_graph(sg, complete=True):
    lines = ["{", f'  "complete": {json.dumps(complete)},', '  "nodes": [']
    nodes = [json.dumps(planted_to_doc(g)) for g in sg.nodes]
    lines.append(",\n".join(f"    {n}" for n in nodes))
    lines.append("  ],")
    lines.append('  "edges": [')
    edges = [json.dumps([a, b, list(lab)]) for a, b, lab in sg.edges]
    lines.append(",\n".join(f"    {e}" for e in edges))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(line for line in lines if line) + "\n"


def swap_graph_from_doc(doc):
    _require_keys(doc, ("nodes", "edges"), ("complete",))
    if not isinstance(doc["nodes"], list) or not isinstance(doc["edges"], list):
        raise ParseError("nodes/edges: expected lists")
    nodes = [planted_from_doc(n, where=f"nodes[{i}]") for i, n in enumerate(doc["nodes"])]
    edges = []
    for i, e in enumerate(doc["edges"]):
        ok = (
            isinstance(e, list) and len(e) == 3
            and all(isinstance(x, int) and 0 <= x < len(nodes) for x in e[:2])
            and isinstance(e[2], list) and len(e[2]) == 2
        )
        if not ok:
            raise ParseError(f"edges[{i}]: expected [node, node, [i, j]]")
        edges.append((e[0], e[1], (_label(e[2][0], f"edges[{i}]"), _label(e[2][1], f"edges[{i}]"))))
    return SwapGraph(nodes=nodes, edges=edges)


def load_document(text):
    """Parse any document kind; returns (kind, value)."""
    doc = _load(text)
    if "vertices" in doc:
        return "planted", planted_from_doc(doc)
    if "sets" in doc:
        return "presentation", presentation_from_doc(doc)
    if "bases" in doc:
        return "matroid", matroid_from_doc(doc)
    if "nodes" in doc:
        return "swap-graph", swap_graph_from_doc(doc)
    raise ParseError("unrecognised document: expected vertices, sets, bases or nodes")


# DOT

def _q(label):
    return json.dumps(label)


def export_dot(g, name="planted"):
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    for v in g.ordered_vertices:
        if v in g.sinks:
            lines.append(f"  {_q(v)} [style=filled, fillcolor=black, fontcolor=white, width=0.6];")
        else:
            lines.append(f"  {_q(v)};")
    for a, b in g.ordered_edges:
        lines.append(f"  {_q(a)} -> {_q(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _swap_label(i, j):
    return f"{i}{j}" if len(i) == 1 and len(j) == 1 else f"{i},{j}"


def export_swap_graph_dot(sg):
    lines = ["digraph swaps {", "  node [shape=box];"]
    for k, g in enumerate(sg.nodes):
        sinks = ",".join(sorted_labels(g.sinks))
        lines.append(f'  "p{k}" [label="p{k}\\nB={sinks}"];')
    for a, b, (i, j) in sorted(sg.edges, key=lambda e: (e[0], e[1], vertex_key(e[2][0]), vertex_key(e[2][1]))):
        lines.append(f'  "p{a}" -> "p{b}" [label={_q(_swap_label(i, j))}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
