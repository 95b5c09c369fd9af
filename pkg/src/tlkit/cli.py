"""Command-line front end.

Exit codes: 0 success, 1 input/usage error, 2 ledger violation (verify
subcommand only), so CI can tell "bad input" from "inequality broken,
file a bug". All output is deterministic: identical argv and stdin
always produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .generate import FAMILIES, GeneratorSpec, generate
from .graph import EdgeListError, all_pairs_distances, parse_graph
from .layering import canonical_tree, layering_partition
from .params.cycles import enumerate_simple_cycles
from .params.fatminor import fat_minor_construct, fat_minor_verify
from .params.mccarty import balanced_separator_for_set
from .report import (
    ReportOptions,
    compute_report,
    expand_corpus_spec,
    report_to_json,
    run_corpus,
    verify_ledger,
)
from .treedec import expanded_cluster_decomposition


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; we reserve 2 for violations."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _read_graph(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise EdgeListError(f"cannot read {path}: {exc}") from None
    return parse_graph(text)


def _parse_vertex_csv(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise EdgeListError(f"expected a comma-separated integer list, got {text!r}")


def _print_remap(g) -> None:
    ids = g.original_ids
    if ids is not None and list(ids) != list(range(g.n)):
        pairs = ", ".join(f"{orig}->{i}" for i, orig in enumerate(ids))
        print(f"# vertex remap: {pairs}")


def _options_from_args(args) -> ReportOptions:
    return ReportOptions(
        sources=tuple(_parse_vertex_csv(args.source)) if getattr(args, "source", None) else None,
        params=frozenset(args.params.split(",")) if getattr(args, "params", None) else None,
        oracle_cap=args.oracle_cap,
        adt_cap=args.adt_cap,
        triple_cap=args.triple_cap,
        max_cycles=args.cycle_cap,
        max_cycle_len=args.cycle_len_cap,
        threads=args.threads,
        seed=args.seed,
    )


def _add_cap_flags(sub) -> None:
    sub.add_argument("--oracle-cap", type=int, default=18, dest="oracle_cap")
    sub.add_argument("--adt-cap", type=int, default=8, dest="adt_cap")
    sub.add_argument("--triple-cap", type=int, default=60, dest="triple_cap")
    sub.add_argument("--cycle-cap", type=int, default=1_000_000, dest="cycle_cap")
    sub.add_argument("--cycle-len-cap", type=int, default=None, dest="cycle_len_cap")
    sub.add_argument("--subset-cap", type=int, default=500_000, dest="subset_cap")
    sub.add_argument("--threads", type=int, default=1)
    sub.add_argument("--seed", type=int, default=0)


def _build_parser() -> _Parser:
    parser = _Parser(prog="tlkit", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("compute", help="full parameter report for a graph")
    sub.add_argument("graph", help="edge-list path or - for stdin")
    sub.add_argument("--source", help="restrict layering sources (csv)")
    sub.add_argument("--params", help="subset of parameter names (csv)")
    sub.add_argument("--json", action="store_true")
    _add_cap_flags(sub)

    sub = subs.add_parser("oracle", help="exact tree-length / tree-breadth")
    sub.add_argument("graph")
    sub.add_argument("--json", action="store_true")
    _add_cap_flags(sub)

    sub = subs.add_parser("decompose", help="expanded-cluster 3-approximation")
    sub.add_argument("graph")
    sub.add_argument("--source", type=int, default=0)
    sub.add_argument("--out", help="write JSON here instead of stdout")
    _add_cap_flags(sub)

    sub = subs.add_parser("separator", help="balanced disk separator certificate")
    sub.add_argument("graph")
    sub.add_argument("--set", required=True, dest="marked", help="marked vertices (csv)")
    sub.add_argument("--method", choices=("layering", "exhaustive"), default="exhaustive")
    sub.add_argument("--source", type=int, default=0)
    _add_cap_flags(sub)

    sub = subs.add_parser("canonical", help="canonical layering tree as an edge list")
    sub.add_argument("graph")
    sub.add_argument("--source", type=int, default=0)
    _add_cap_flags(sub)

    sub = subs.add_parser("fatminor", help="construct and check a fat-triangle witness")
    sub.add_argument("graph")
    sub.add_argument("--source", type=int, default=0)
    sub.add_argument("--k", type=int, required=True)
    _add_cap_flags(sub)

    sub = subs.add_parser("cycles", help="enumerate simple cycles")
    sub.add_argument("graph")
    sub.add_argument("--max-cycles", type=int, default=1_000_000)
    sub.add_argument("--max-len", type=int, default=None)
    sub.add_argument("--json", action="store_true")
    _add_cap_flags(sub)

    sub = subs.add_parser("verify", help="evaluate the inequality ledger")
    sub.add_argument("graph", nargs="?", help="edge-list path or - for stdin")
    sub.add_argument("--corpus", help="corpus spec, e.g. random:count=100,maxn=10,seed=7")
    sub.add_argument("--json", action="store_true")
    _add_cap_flags(sub)

    sub = subs.add_parser("generate", help="emit a generated graph as an edge list")
    sub.add_argument("family", choices=FAMILIES)
    sub.add_argument("--n", type=int)
    sub.add_argument("--m", type=int)
    sub.add_argument("--p", type=int)
    sub.add_argument("--q", type=int)
    sub.add_argument("--blocks", type=int)
    sub.add_argument("--max-clique", type=int, dest="max_clique")
    sub.add_argument("--seed", type=int, default=0)
    return parser


def _cmd_compute(args) -> int:
    g = _read_graph(args.graph)
    options = _options_from_args(args)
    report = compute_report(g, options)
    ledger = verify_ledger(report)
    if args.json:
        sys.stdout.write(report_to_json(report, ledger))
        return 0
    _print_remap(g)
    print(f"graph: n={report.n} m={report.m} hash={report.graph_hash}")
    for entry in report.entries:
        value = "-" if entry.value is None else entry.value
        note = f"  [{entry.witness}]" if entry.witness else ""
        print(f"{entry.name:12} {str(value):>6}  {entry.status}{note}")
    return 0


def _cmd_oracle(args) -> int:
    g = _read_graph(args.graph)
    dist = all_pairs_distances(g)
    from .treedec import tl_tb_oracle

    result = tl_tb_oracle(g, dist, cap_n=args.oracle_cap)
    if args.json:
        payload = {
            "status": result.status,
            "tl": result.tl,
            "tb": result.tb,
            "tl_order": list(result.tl_order) if result.tl_order else None,
            "tb_order": list(result.tb_order) if result.tb_order else None,
        }
        print(json.dumps(payload, sort_keys=True))
        return 0
    if result.status != "exact":
        print(f"skipped: n={g.n} exceeds the oracle cap {args.oracle_cap}")
        return 0
    print(f"tl {result.tl}  order {','.join(map(str, result.tl_order))}")
    print(f"tb {result.tb}  order {','.join(map(str, result.tb_order))}")
    return 0


def _cmd_decompose(args) -> int:
    g = _read_graph(args.graph)
    dist = all_pairs_distances(g)
    if not (0 <= args.source < g.n):
        raise EdgeListError(f"source {args.source} out of range")
    td = expanded_cluster_decomposition(g, dist, args.source)
    text = td.to_json() + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_separator(args) -> int:
    g = _read_graph(args.graph)
    dist = all_pairs_distances(g)
    marked = _parse_vertex_csv(args.marked)
    cert = balanced_separator_for_set(
        g, dist, marked, method=args.method, source=args.source
    )
    print(json.dumps(cert.to_json_dict(), sort_keys=True))
    return 0


def _cmd_canonical(args) -> int:
    g = _read_graph(args.graph)
    dist = all_pairs_distances(g)
    if not (0 <= args.source < g.n):
        raise EdgeListError(f"source {args.source} out of range")
    tree = canonical_tree(g, layering_partition(g, dist, args.source))
    sys.stdout.write(tree.to_text())
    return 0


def _cmd_fatminor(args) -> int:
    g = _read_graph(args.graph)
    dist = all_pairs_distances(g)
    if not (0 <= args.source < g.n):
        raise EdgeListError(f"source {args.source} out of range")
    try:
        witness = fat_minor_construct(g, dist, args.source, args.k)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    failure = fat_minor_verify(g, dist, witness, args.k)
    if failure is not None:  # pragma: no cover - construction is certified
        print(f"error: witness failed verification: {failure.message}", file=sys.stderr)
        return 1
    print(witness.to_json())
    return 0


def _cmd_cycles(args) -> int:
    g = _read_graph(args.graph)
    enum = enumerate_simple_cycles(g, args.max_cycles, args.max_len)
    if args.json:
        payload = {
            "cycles": [list(c) for c in enum.cycles],
            "truncated": enum.truncated,
        }
        print(json.dumps(payload, sort_keys=True))
        return 0
    for cycle in enum.cycles:
        print(",".join(map(str, cycle)))
    print(f"# {len(enum.cycles)} cycles, truncated={str(enum.truncated).lower()}")
    return 0


def _cmd_verify(args) -> int:
    options = _options_from_args(args)
    if args.corpus:
        result = run_corpus(expand_corpus_spec(args.corpus), options)
        if args.json:
            payload = {
                "graphs": result.graphs,
                "holds": result.holds,
                "violated": result.violated,
                "not_evaluable": result.not_evaluable,
            }
            print(json.dumps(payload, sort_keys=True))
        else:
            print(
                f"graphs {result.graphs}  holds {result.holds}  "
                f"violated {result.violated}  not-evaluable {result.not_evaluable}"
            )
            if result.first_violation:
                label, row_id, edge_text = result.first_violation
                print(f"first violation: {row_id} on {label}")
                sys.stdout.write(edge_text)
        return 2 if result.violated else 0
    if not args.graph:
        print("error: give a graph or --corpus", file=sys.stderr)
        return 1
    g = _read_graph(args.graph)
    report = compute_report(g, options)
    ledger = verify_ledger(report)
    violated = [r for r in ledger if r.verdict == "violated"]
    if args.json:
        sys.stdout.write(report_to_json(report, ledger))
    else:
        for result in ledger:
            detail = f"  {result.lhs} <= {result.rhs}" if result.lhs else ""
            print(f"{result.row_id:36} {result.verdict}{detail}")
        print(f"# violated: {len(violated)}")
    return 2 if violated else 0


def _cmd_generate(args) -> int:
    params = {}
    for key in ("n", "m", "p", "q", "blocks", "max_clique"):
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    g = generate(GeneratorSpec(args.family, params, args.seed))
    sys.stdout.write(g.to_edge_list_text())
    return 0


_COMMANDS = {
    "compute": _cmd_compute,
    "oracle": _cmd_oracle,
    "decompose": _cmd_decompose,
    "separator": _cmd_separator,
    "canonical": _cmd_canonical,
    "fatminor": _cmd_fatminor,
    "cycles": _cmd_cycles,
    "verify": _cmd_verify,
    "generate": _cmd_generate,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (EdgeListError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
