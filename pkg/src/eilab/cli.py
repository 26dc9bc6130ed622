"""Command-line surface tying the modules together.

Subcommands: ``invariants``, ``reg``, ``classify``, ``bounds``, ``verify``
and ``enumerate``.  Graphs come from graph6 files (``-`` for stdin) or
edge-list JSON documents; tabular results go to stdout as CSV or JSON.
Exit status: 0 on success or an all-pass sweep, 1 on any violation or bad
input data, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds_engine, chordality, classifier, formats_io, harness, matchings
from .errors import (
    CapExceeded,
    EilabError,
    MalformedDocument,
    MalformedGraph6,
    NotApplicable,
)
from .formats_io import GraphDocument, ReportRow
from .regularity_oracle import FieldSpec, regularity


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MalformedGraph6, MalformedDocument) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except EilabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eilab",
        description="Edge-ideal regularity lab: exact invariants, "
        "classification and verification sweeps on small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_inputs(p):
        p.add_argument("--g6", metavar="FILE", help="graph6 file, '-' for stdin")
        p.add_argument("--json", metavar="FILE", help="edge-list JSON file, '-' for stdin")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("invariants", help="matching and cover invariants per graph")
    add_inputs(p)
    p.add_argument("--cochord-cap", type=int, default=4)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("reg", help="regularity of the edge ideal per graph")
    add_inputs(p)
    p.add_argument("--char", type=int, action="append", default=None)
    p.set_defaults(func=_cmd_reg)

    p = sub.add_parser("classify", help="structural vs numeric classification")
    add_inputs(p)
    p.add_argument("--char", type=int, action="append", default=None)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("bounds", help="certified regularity interval, no homology")
    add_inputs(p)
    p.add_argument("--budget", type=int, default=bounds_engine.DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("verify", help="exhaustive theorem/lemma verification sweeps")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--lemmas", default=None, help="comma list of lemma tags, or 'all'")
    p.add_argument("--chars", default="0,2", help="comma list of field characteristics")
    p.add_argument("--allow-skips", action="store_true")
    p.add_argument("--no-unions", action="store_true")
    p.add_argument("--from-file", metavar="FILE", help="graph6 corpus instead of enumeration")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate", help="enumerate small graphs up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    return parser


# -- input plumbing -----------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_documents(args) -> tuple[list[GraphDocument], str | None]:
    """Parse inputs; on bad data, return the documents read so far plus the
    error text, so commands can flush partial results before failing."""
    if bool(args.g6) == bool(args.json):
        raise MalformedDocument("exactly one of --g6 or --json is required")
    if args.g6:
        return formats_io.read_graph6_lines_lenient(_read(args.g6))
    text = _read(args.json)
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        return [], f"invalid JSON: line {exc.lineno}: {exc.msg}"
    docs: list[GraphDocument] = []
    entries = payload if isinstance(payload, list) else [payload]
    for i, entry in enumerate(entries):
        try:
            g = formats_io.parse_edge_list(entry)
        except (MalformedDocument, EilabError) as exc:
            return docs, f"document {i}: {exc}"
        name = entry.get("name") if isinstance(entry, dict) else None
        docs.append(GraphDocument("edgelist-json", json.dumps(entry), g, name))
    return docs, None


def _row_id(doc: GraphDocument, idx: int) -> str:
    if doc.name:
        return doc.name
    if doc.fmt == "graph6":
        return doc.raw
    return f"g{idx}"


def _chars(args) -> tuple[int, ...]:
    return tuple(args.char) if args.char else (0,)


# -- subcommands ---------------------------------------------------------------


def _finish(rows, args, error: str | None, code: int = 0) -> int:
    print(formats_io.write_report(rows, args.format), end="")
    if error is not None:
        print(f"error: {error}", file=sys.stderr)
        return 1
    return code


def _cmd_invariants(args) -> int:
    docs, error = _load_documents(args)
    rows = []
    for idx, doc in enumerate(docs):
        g = doc.graph
        row = ReportRow(_row_id(doc, idx), g.n, g.num_edges)
        row.nu = matchings.nu(g)
        if g.num_edges:
            row.nu0 = matchings.nu0(g)
            row.mm = matchings.mm(g)
            try:
                row.cochord = chordality.cochord_number(g, cap=args.cochord_cap).k
            except CapExceeded as exc:
                row.certificate = f"cochord > cap (bound <= {exc.best_bound})"
        else:
            row.nu0 = row.mm = 0
        rows.append(row)
    return _finish(rows, args, error)


def _cmd_reg(args) -> int:
    docs, error = _load_documents(args)
    rows = []
    for idx, doc in enumerate(docs):
        g = doc.graph
        row = ReportRow(_row_id(doc, idx), g.n, g.num_edges)
        for c in _chars(args):
            res = regularity(g, FieldSpec(c))
            row.reg[c] = res.reg_star
            if res.witness_subset is not None:
                row.certificate = (
                    f"witness W={res.witness_subset} degree={res.witness_degree}"
                )
        rows.append(row)
    return _finish(rows, args, error)


def _cmd_classify(args) -> int:
    docs, error = _load_documents(args)
    rows = []
    any_disagreement = False
    for idx, doc in enumerate(docs):
        g = doc.graph
        row = ReportRow(_row_id(doc, idx), g.n, g.num_edges)
        row.nu = matchings.nu(g)
        row.nu0 = matchings.nu0(g)
        verdicts = []
        for c in _chars(args):
            v = classifier.classify(g, FieldSpec(c))
            row.reg[c] = regularity(g, FieldSpec(c)).reg_star
            verdicts.append(v)
        agree = all(v.agreement for v in verdicts)
        any_disagreement |= not agree
        row.verdict = (
            f"structural={verdicts[0].structural} "
            f"numeric={'/'.join(str(v.numeric) for v in verdicts)} "
            f"{'agree' if agree else 'DISAGREE'}"
        )
        row.certificate = ",".join(verdicts[0].component_shapes)
        rows.append(row)
    return _finish(rows, args, error, 1 if any_disagreement else 0)


def _cmd_bounds(args) -> int:
    docs, error = _load_documents(args)
    rows = []
    for idx, doc in enumerate(docs):
        g = doc.graph
        row = ReportRow(_row_id(doc, idx), g.n, g.num_edges)
        try:
            iv = bounds_engine.refine_bounds(g, budget=args.budget)
        except NotApplicable:
            row.verdict = "edgeless"
            rows.append(row)
            continue
        row.nu = matchings.nu(g)
        row.nu0 = matchings.nu0(g)
        row.mm = matchings.mm(g)
        flag = " (budget exhausted)" if iv.budget_exhausted else ""
        row.verdict = f"reg in [{iv.lo},{iv.hi}]{flag}"
        row.certificate = "; ".join(f"{rule}:{contrib}" for rule, _, contrib in iv.trace)
        rows.append(row)
    return _finish(rows, args, error)


def _cmd_verify(args) -> int:
    chars = tuple(int(c) for c in args.chars.split(",") if c != "")
    if args.from_file:
        corpus = harness.corpus_from_graph6(_read(args.from_file))
    else:
        corpus = harness.corpus_up_to(args.max_n)
    graphs = corpus.graphs
    reports = []
    if args.lemmas:
        tags = (
            list(harness.LEMMA_TAGS)
            if args.lemmas == "all"
            else [t.strip() for t in args.lemmas.split(",") if t.strip()]
        )
        reports.extend(harness.verify_lemma_suite(graphs, tags, chars=chars))
    else:
        reports.append(
            harness.verify_theorem(
                graphs,
                chars=chars,
                include_unions=not args.no_unions,
                workers=harness.default_workers(),
            )
        )
    failed = False
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        skipinfo = f", {len(rep.skips)} skipped" if rep.skips else ""
        print(
            f"{status} {rep.property_name}: {rep.checked} graphs checked"
            f"{skipinfo} [{rep.seconds:.2f}s]"
        )
        for g6, detail in rep.violations:
            print(f"  violation {g6}: {detail}")
        if not rep.passed or (rep.skips and not args.allow_skips):
            failed = True
    return 1 if failed else 0


def _cmd_enumerate(args) -> int:
    corpus = (
        harness.enumerate_connected(args.n)
        if args.connected
        else harness.enumerate_all(args.n)
    )
    for g in corpus.graphs:
        print(formats_io.encode_graph6(g))
    return 0


if __name__ == "__main__":
    sys.exit(main())
