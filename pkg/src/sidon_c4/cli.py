"""Command-line entry point: ``sidon-c4 {construct,verify,tables,export}``.

Exit codes: 0 success, 1 a verification or table mismatch, 2 bad usage or
parameters, 3 a size budget was exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import constructions, graph, tables
from .analysis import difference_profile
from .errors import SidonError, SizeExceeded
from .verify import verify

FAMILIES = ("bose-chowla", "singer", "ruzsa", "cart1", "cart2", "cart3")


def _family_args(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("family", choices=FAMILIES, nargs=None if required else "?")
    parser.add_argument("--q", type=int, help="prime power (bose-chowla, singer)")
    parser.add_argument("--h", type=int, default=2, help="bose-chowla exponent (default 2)")
    parser.add_argument("--p", type=int, help="prime (ruzsa, cart1, cart2, cart3)")
    parser.add_argument("--theta", type=int, help="primitive root mod p for ruzsa")
    parser.add_argument("--alpha", type=int, default=1, help="cart3 shift (default 1)")


def _build(args) -> constructions.SidonSet:
    return constructions.construct(args.family, q=args.q, h=args.h, p=args.p,
                                   theta=args.theta, alpha=args.alpha)


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_construct(args) -> int:
    s = _build(args)
    _emit(constructions.dumps(s), args.out)
    summary = f"|X|={s.group.order} |A|={len(s)} d(A)={difference_profile(s).deficiency}\n"
    (sys.stderr if args.out in (None, "-") else sys.stdout).write(summary)
    return 0


def cmd_verify(args) -> int:
    if args.set is not None:
        if args.family is not None:
            raise SidonError("give either a family or --set, not both")
        s = constructions.load(args.set)
    elif args.family is not None:
        s = _build(args)
    else:
        raise SidonError("give a family or --set")
    report = verify(s, args.level)
    sys.stdout.write(report.to_json(meta=not args.no_meta))
    return 0 if report.ok else 1


def cmd_tables(args) -> int:
    table = tables.TABLES[args.which](args.q, args.p)
    sys.stdout.write(table.to_csv() if args.format == "csv" else table.to_text())
    if not table.ok:
        for row in table.mismatches():
            print(f"mismatch: {row[0]}", file=sys.stderr)
        return 1
    return 0


def cmd_export(args) -> int:
    G = graph.build_sum_graph(_build(args))
    text = graph.edge_list(G) if args.format == "edgelist" else graph.to_json(G)
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sidon-c4", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a Sidon set and write it in set-file format")
    _family_args(c)
    c.add_argument("--out", "-o", help="output path (default stdout)")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="run the checks and print a JSON report")
    _family_args(v, required=False)
    v.add_argument("--set", help="set file to verify instead of a family")
    v.add_argument("--level", choices=("lemmas", "full"), default="lemmas")
    v.add_argument("--no-meta", action="store_true", help="omit the timestamp block")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", help="deficiency or edge-count table")
    t.add_argument("--which", choices=sorted(tables.TABLES), required=True)
    t.add_argument("--q", type=int, nargs="*", default=list(tables.DEFAULT_Q),
                   help="prime powers for bose-chowla and singer rows")
    t.add_argument("--p", type=int, nargs="*", default=list(tables.DEFAULT_P),
                   help="odd primes for ruzsa and cartesian rows")
    t.add_argument("--format", choices=("text", "csv"), default="text")
    t.set_defaults(func=cmd_tables)

    e = sub.add_parser("export", help="write the sum graph")
    _family_args(e)
    e.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
    e.add_argument("--out", "-o", help="output path (default stdout)")
    e.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (SidonError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
