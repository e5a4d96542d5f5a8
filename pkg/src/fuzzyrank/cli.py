"""Command-line front door.

Subcommands:

    validate  --scheme <path> --data <path>
    rank      --scheme <path> --data <path> --method topsis|wp|both
              --format table|json [--out <path>] [--no-meta]
    explain   --scheme <path> --data <path> --method topsis|wp|both  <id>
    serve     --port <u16> --store <dir>

Exit codes: 0 success, 1 domain or validation error, 2 environment or IO
error. JSON output is canonical and, with --no-meta, byte-identical across
repeated identical invocations; tables round values to 3 decimals.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import DomainError
from .ingest import load_dataset, load_scheme
from .model import (
    UnknownAlternative,
    apply_eligibility,
    lower_to_crisp,
    orientation_vector,
    validate_dataset,
    weight_vector,
)
from .results import ResultDocument, document_json, rank_documents
from .topsis import rank_topsis
from .wp import rank_wp


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzyrank",
        description="Rank candidates against weighted criteria with two "
        "fuzzy multi-criteria methods.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io_flags(p, with_method=True, with_format=False):
        p.add_argument("--scheme", required=True, help="scheme JSON file")
        p.add_argument("--data", required=True, help="dataset CSV file")
        if with_method:
            p.add_argument(
                "--method", required=True, choices=["topsis", "wp", "both"]
            )
        if with_format:
            p.add_argument("--format", required=True, choices=["table", "json"])
            p.add_argument("--out", help="write output here instead of stdout")
            p.add_argument(
                "--no-meta",
                action="store_true",
                help="omit the metadata block (timestamps) for reproducible output",
            )

    p_validate = sub.add_parser("validate", help="report dataset problems")
    add_io_flags(p_validate, with_method=False)
    p_validate.set_defaults(func=cmd_validate)

    p_rank = sub.add_parser("rank", help="rank the dataset")
    add_io_flags(p_rank, with_format=True)
    p_rank.set_defaults(func=cmd_rank)

    p_explain = sub.add_parser("explain", help="trace one alternative's score")
    add_io_flags(p_explain)
    p_explain.add_argument("alternative", help="alternative id to explain")
    p_explain.set_defaults(func=cmd_explain)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--port", required=True, type=int)
    p_serve.add_argument("--store", required=True, help="store directory")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def _load(args):
    scheme = load_scheme(args.scheme)
    alts = load_dataset(args.data, scheme)
    return scheme, alts


def cmd_validate(args) -> int:
    scheme, alts = _load(args)
    issues = validate_dataset(scheme, alts)
    for issue in issues:
        print(issue)
    return 1 if issues else 0


def _render_table(doc: ResultDocument) -> str:
    lines = [f"method={doc.method} scheme={doc.scheme}"]
    if doc.method == "topsis":
        header = f"{'id':<8} {'V':>8} {'rank':>4} {'D+':>8} {'D-':>8}"
        rows = [
            f"{e.id:<8} {e.v:>8.3f} {e.rank:>4d} {e.d_pos:>8.3f} {e.d_neg:>8.3f}"
            for e in doc.results
        ]
    else:
        header = f"{'id':<8} {'V':>8} {'rank':>4} {'S':>10}"
        rows = [
            f"{e.id:<8} {e.v:>8.3f} {e.rank:>4d} {e.s:>10.3f}" for e in doc.results
        ]
    lines.append(header)
    lines.extend(rows)
    if doc.excluded:
        lines.append("excluded: " + ", ".join(doc.excluded))
    return "\n".join(lines) + "\n"


def cmd_rank(args) -> int:
    scheme, alts = _load(args)
    docs = rank_documents(scheme, alts, args.method, with_meta=not args.no_meta)
    if args.format == "json":
        text = document_json(docs)
    else:
        text = "\n".join(_render_table(doc) for doc in docs.values())
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _explain_one(scheme, kept, matrix, method, index) -> str:
    weights = weight_vector(scheme)
    orients = orientation_vector(scheme)
    alt = kept[index]
    lines = [f"{alt.id} ({scheme.name}, {method})"]
    raws = "  ".join(
        f"{c.id}={cell}" for c, cell in zip(scheme.criteria, alt.cells)
    )
    lines.append(f"raw:        {raws}")
    crisp = "  ".join(
        f"{c.id}={matrix.values[index, j]:.6g}"
        for j, c in enumerate(scheme.criteria)
    )
    lines.append(f"crisp:      {crisp}")
    if method == "topsis":
        trace = rank_topsis(matrix, weights, orients)
        lines.append(
            "normalized: "
            + "  ".join(f"{x:.6f}" for x in trace.normalized[index])
        )
        lines.append(
            "weighted:   "
            + "  ".join(f"{x:.6f}" for x in trace.weighted[index])
        )
        lines.append(
            f"D+ = {trace.dist_pos[index]:.6f}, D- = {trace.dist_neg[index]:.6f}"
        )
        v, rank = trace.closeness[index], trace.ranks[index]
    else:
        trace = rank_wp(matrix, weights, orients)
        lines.append(
            "signed weights: " + "  ".join(f"{x:+.6f}" for x in trace.norm_weights)
        )
        lines.append(f"S = {trace.scores[index]:.6f}")
        v, rank = trace.preferences[index], trace.ranks[index]
    lines.append(f"V = {v:.6f}, rank {rank}")
    return "\n".join(lines) + "\n"


def cmd_explain(args) -> int:
    scheme, alts = _load(args)
    kept, excluded = apply_eligibility(scheme, alts)
    if args.alternative in excluded:
        raise UnknownAlternative(
            f"{args.alternative!r} was excluded by eligibility screening"
        )
    ids = [a.id for a in kept]
    if args.alternative not in ids:
        raise UnknownAlternative(f"no alternative {args.alternative!r} in the dataset")
    index = ids.index(args.alternative)
    matrix = lower_to_crisp(scheme, kept)
    methods = ["topsis", "wp"] if args.method == "both" else [args.method]
    sys.stdout.write(
        "\n".join(_explain_one(scheme, kept, matrix, m, index) for m in methods)
    )
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    if not 0 < args.port < 65536:
        raise DomainError(f"port must be in 1..65535, got {args.port}")
    app = create_app(Path(args.store))
    uvicorn.run(app, host="127.0.0.1", port=args.port)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
