"""Command-line interface.

Exit codes: 0 success or predicate true, 1 predicate false, 2 usage or
input error, 3 internal invariant violation.
"""
import argparse
import sys

from . import oracle
from .equivalence import isomorphism_classes, same_matroid, swap_graph, swap_path
from .errors import InvalidInputError, InvariantViolation, NoTransversalError, ParseError, PartialResultError
from .io import (
    emit_matroid,
    emit_planted,
    emit_presentation,
    emit_swap_graph,
    export_dot,
    export_swap_graph_dot,
    load_document,
    parse_planted,
    parse_presentation,
)
from .labels import sorted_labels
from .planted import enumerate_bases, loops, rank, swap, valid_swaps, validate
from .saturation import claw, contract_presentation, is_saturated, saturate
from .transversal import (
    dragon_condition,
    dualize,
    enumerate_transversals,
    find_sdr,
    sdr_exchange_path,
    sdr_exchange_walk,
    undualize,
)

OK, FALSE, USAGE, INTERNAL = 0, 1, 2, 3


class UsageError(InvalidInputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _planted(path, check=True):
    try:
        return parse_planted(_read(path), check=check)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _presentation(path):
    try:
        return parse_presentation(_read(path))
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _vertex_list(text):
    if text is None:
        raise UsageError("this command needs --set")
    return [x for x in (s.strip() for s in text.split(",")) if x]


def _words(labels):
    return " ".join(sorted_labels(labels))


def _matroid(path):
    kind, value = load_document(_read(path))
    if kind == "planted":
        return enumerate_bases(value)
    if kind == "presentation":
        return enumerate_transversals(value[0])
    if kind == "matroid":
        return value
    raise UsageError(f"{path}: a swap graph is not a matroid")


def _bases_lines(m):
    return "".join(" ".join(b) + "\n" for b in m.sorted_bases())


# subcommands return (exit code, stdout text)

def cmd_validate(args):
    problems = validate(_planted(args.file, check=False))
    if problems:
        return FALSE, "".join(p + "\n" for p in problems)
    return OK, "valid\n"


def cmd_bases(args):
    return OK, _bases_lines(enumerate_bases(_planted(args.file)))


def cmd_rank(args):
    return OK, f"{rank(_planted(args.file), _vertex_list(args.set))}\n"


def cmd_loops(args):
    return OK, _words(loops(_planted(args.file))) + "\n"


def cmd_swap(args):
    if args.from_ is None or args.to is None:
        raise UsageError("swap needs --from and --to")
    return OK, emit_planted(swap(_planted(args.file), args.from_, args.to))


def cmd_valid_swaps(args):
    return OK, "".join(f"{i} {j}\n" for i, j in valid_swaps(_planted(args.file)))


def cmd_saturate(args):
    return OK, emit_planted(saturate(_planted(args.file)))


def cmd_is_saturated(args):
    if is_saturated(_planted(args.file)):
        return OK, "saturated\n"
    return FALSE, "not saturated\n"


def cmd_claw(args):
    if args.vertex is None:
        raise UsageError("claw needs --vertex")
    return OK, _words(claw(_planted(args.file), args.vertex)) + "\n"


def cmd_contract(args):
    return OK, emit_planted(contract_presentation(_planted(args.file), _vertex_list(args.set)))


def cmd_dualize(args):
    p, m = dualize(_planted(args.file))
    return OK, emit_presentation(p, m)


def cmd_undualize(args):
    p, m = _presentation(args.file)
    if m is None:
        raise UsageError(f"{args.file}: undualize needs a presentation with an sdr")
    return OK, emit_planted(undualize(p, m))


def cmd_transversals(args):
    p, _ = _presentation(args.file)
    try:
        return OK, _bases_lines(enumerate_transversals(p))
    except NoTransversalError as exc:
        print(exc, file=sys.stderr)
        return FALSE, ""


def cmd_dragon(args):
    p, _ = _presentation(args.file)
    return (OK, "holds\n") if dragon_condition(p) else (FALSE, "fails\n")


def cmd_sdr(args):
    p, _ = _presentation(args.file)
    m = find_sdr(p)
    if m is None:
        return FALSE, "no SDR\n"
    return OK, " ".join(m) + "\n"


def cmd_sdr_path(args):
    p, m = _presentation(args.file)
    start = tuple(_vertex_list(args.from_)) if args.from_ else m
    if start is None or args.to is None:
        raise UsageError("sdr-path needs --to, and --from unless the document has an sdr")
    search = sdr_exchange_walk if args.constructive else sdr_exchange_path
    chain = search(p, start, tuple(_vertex_list(args.to)))
    return OK, "".join(" ".join(s) + "\n" for s in chain)


def _witness_lines(seq):
    return "".join(f"swap {i} {j}\n" for i, j in seq.steps)


def cmd_equivalent(args):
    g1, g2 = _planted(args.first), _planted(args.second)
    if args.witness:
        seq = swap_path(g1, g2)
        if seq is None:
            return FALSE, "not equivalent\n"
        return OK, "equivalent\n" + _witness_lines(seq)
    return (OK, "equivalent\n") if same_matroid(g1, g2) else (FALSE, "not equivalent\n")


def cmd_swap_path(args):
    seq = swap_path(_planted(args.first), _planted(args.second))
    if seq is None:
        print("not equivalent", file=sys.stderr)
        return FALSE, ""
    return OK, "".join(f"{i} {j}\n" for i, j in seq.steps)


def cmd_swap_graph(args):
    g = _planted(args.file)
    code, complete = OK, True
    try:
        sg = swap_graph(g, args.limit)
    except PartialResultError as exc:
        print(f"{exc}; output is partial", file=sys.stderr)
        sg, code, complete = exc.partial, FALSE, False
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(export_swap_graph_dot(sg))
    return code, emit_swap_graph(sg, complete=complete)


def cmd_iso_classes(args):
    graphs = []
    for path in args.files:
        kind, value = load_document(_read(path))
        if kind == "planted":
            graphs.append(value)
        elif kind == "swap-graph":
            graphs.extend(value.nodes)
        else:
            raise UsageError(f"{path}: expected planted graphs or a swap graph")
    classes = isomorphism_classes(graphs)
    return OK, "".join(" ".join(map(str, c)) + "\n" for c in classes)


def cmd_oracle(args):
    m = _matroid(args.file)
    if args.action == "check-axioms":
        return (OK, "ok\n") if oracle.check_exchange_axiom(m) else (FALSE, "violated\n")
    if args.action == "dual":
        return OK, emit_matroid(oracle.dual(m))
    if args.action == "contract":
        return OK, emit_matroid(oracle.contract(m, _vertex_list(args.set)))
    if args.action == "loops-coloops":
        lo, co = oracle.loops_and_coloops(m)
        return OK, f"loops: {_words(lo)}".rstrip() + "\n" + f"coloops: {_words(co)}".rstrip() + "\n"
    if args.other is None:
        raise UsageError("oracle equal needs a second file")
    same = oracle.equal(m, _matroid(args.other))
    return (OK, "equal\n") if same else (FALSE, "not equal\n")


def cmd_export_dot(args):
    kind, value = load_document(_read(args.file))
    if kind == "planted":
        return OK, export_dot(value)
    if kind == "swap-graph":
        return OK, export_swap_graph_dot(value)
    raise UsageError(f"{args.file}: export-dot takes a planted graph or a swap graph")


def build_parser():
    parser = _Parser(prog="cotransversal", description="Cotransversal matroids from planted graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, files=1):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--output", "-o", help="write the result to this file instead of stdout")
        if files == 1:
            p.add_argument("file", nargs="?", default="-")
        elif files == 2:
            p.add_argument("first")
            p.add_argument("second")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "list invariant violations of a planted graph")
    add("bases", cmd_bases, "enumerate the bases of L(G,B)")
    add("rank", cmd_rank, "maximum routing size from --set").add_argument("--set")
    add("loops", cmd_loops, "vertices with no path to a sink")
    p = add("swap", cmd_swap, "apply swap(--from, --to)")
    p.add_argument("--from", dest="from_")
    p.add_argument("--to")
    add("valid-swaps", cmd_valid_swaps, "list applicable swaps")
    add("saturate", cmd_saturate, "saturate a planted graph")
    add("is-saturated", cmd_is_saturated, "exit 0 iff the graph is saturated")
    add("claw", cmd_claw, "a vertex and its out-neighbours").add_argument("--vertex")
    add("contract", cmd_contract, "presentation of the contraction by --set").add_argument("--set")
    add("dualize", cmd_dualize, "planted graph to transversal presentation with SDR")
    add("undualize", cmd_undualize, "presentation with SDR to planted graph")
    add("transversals", cmd_transversals, "enumerate transversals of a presentation")
    add("dragon", cmd_dragon, "exit 0 iff the dragon marriage condition holds")
    add("sdr", cmd_sdr, "find an SDR")
    p = add("sdr-path", cmd_sdr_path, "single-exchange path between two SDRs")
    p.add_argument("--from", dest="from_")
    p.add_argument("--to")
    p.add_argument("--constructive", action="store_true", help="use the zigzag reduction instead of BFS")
    add("equivalent", cmd_equivalent, "exit 0 iff both graphs give the same matroid", files=2).add_argument(
        "--witness", action="store_true"
    )
    add("swap-path", cmd_swap_path, "swaps between the two saturations", files=2)
    p = add("swap-graph", cmd_swap_graph, "graph of saturated presentations")
    p.add_argument("--limit", type=int, default=1000)
    p.add_argument("--dot")
    p = add("iso-classes", cmd_iso_classes, "partition graphs into isomorphism classes", files=0)
    p.add_argument("files", nargs="+")
    p = add("oracle", cmd_oracle, "brute-force matroid operations", files=0)
    p.add_argument("action", choices=["check-axioms", "dual", "contract", "loops-coloops", "equal"])
    p.add_argument("file")
    p.add_argument("other", nargs="?")
    p.add_argument("--set")
    add("export-dot", cmd_export_dot, "Graphviz DOT for a planted graph or swap graph")
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        code, text = args.func(args)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code
