"""Command-line entry point: ``symgraph scan ...``.

Exit status is 0 when every counted record passes, 2 when any fails and 1
on configuration errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import BadFamilyParamsError, ConfigError
from .generators import FamilySpec
from .report import CERTIFIERS, ScanConfig, emit, exit_code, run_scan
from .symmetry import DEFAULT_NODE_LIMIT


def _bool(text: str) -> bool:
    value = text.strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {text!r}")


def _certifiers(values):
    if not values:
        return CERTIFIERS
    names = []
    for value in values:
        for name in value.split(","):
            name = name.strip()
            if name == "all":
                names.extend(CERTIFIERS)
            elif name:
                names.append(name)
    return tuple(dict.fromkeys(names))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    scan = sub.add_parser("scan", help="certify eigenvalue bounds over a graph corpus")
    scan.add_argument("--family", action="append", default=[], metavar="SPEC",
                      help="generated graph, e.g. cycle:9, complete:5, hypercube:3, "
                           "complete_bipartite:4, circulant:6:2,3, petersen (repeatable)")
    scan.add_argument("--input", action="append", default=[], metavar="PATH",
                      help="graph6 file (.g6/.graph6) or edge-list file (repeatable)")
    scan.add_argument("--certify", action="append", default=[], metavar="NAMES",
                      help=f"comma-separated subset of {{{','.join(CERTIFIERS)}}} or 'all' (default all)")
    scan.add_argument("--assume-symmetric", type=_bool, nargs="?", const=True, default=False,
                      metavar="BOOL", help="treat every graph as arc-transitive")
    scan.add_argument("--tol-group", type=float, default=1e-8, help="eigenvalue grouping tolerance")
    scan.add_argument("--tol-ineq", type=float, default=1e-7, help="relative inequality tolerance")
    scan.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT,
                      help="automorphism search budget per search")
    scan.add_argument("--seed", type=int, default=42)
    scan.add_argument("--max-k", type=int, default=None, help="largest k checked (default N-2)")
    scan.add_argument("--out", default=None, help="output path; '-' or omitted writes to stdout")
    scan.add_argument("--format", choices=("json", "csv"), default=None,
                      help="report format (default: from --out suffix, else json)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    fmt = args.format
    if fmt is None:
        fmt = "csv" if args.out and Path(args.out).suffix.lower() == ".csv" else "json"
    try:
        inputs = [FamilySpec.parse(f) for f in args.family] + list(args.input)
        config = ScanConfig(
            inputs=inputs,
            certifiers=_certifiers(args.certify),
            tol_group=args.tol_group,
            tol_ineq=args.tol_ineq,
            assume_symmetric=args.assume_symmetric,
            node_limit=args.node_limit,
            seed=args.seed,
            max_k=args.max_k,
        )
        report = run_scan(config)
    except (ConfigError, BadFamilyParamsError) as exc:
        print(f"symgraph: error: {exc}", file=sys.stderr)
        return 1

    if args.out in (None, "-"):
        sys.stdout.write(emit(report, fmt))
    else:
        emit(report, fmt, args.out)
    s = report.summary
    print(
        f"{s['input_graphs']} graph(s), {s['skipped_graphs']} skipped; "
        f"{s['passed']} passed, {s['failed']} failed, {s['unverified']} unverified, "
        f"{s['skipped']} certifier skip(s)",
        file=sys.stderr,
    )
    return exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
