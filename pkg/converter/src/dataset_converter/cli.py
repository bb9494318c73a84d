"""Command line entry point: list, convert, verify."""

from __future__ import annotations

import argparse
import sys

from .convert import convert
from .errors import ConverterError, FetchError
from .sources import SOURCES
from .verify import verify

# exit codes: 0 ok, 1 hard failure, 75 transient fetch failure (sysexits EX_TEMPFAIL)
EXIT_HARD = 1
EXIT_RETRYABLE = 75


def _cmd_list(_args) -> int:
    width = max(len(name) for name in SOURCES)
    print(f"{'name':{width}}  {'nodes':>7} {'edges':>7} {'features':>8} {'classes':>7}")
    for name in sorted(SOURCES):
        n, e, f, c = SOURCES[name].expected
        print(f"{name:{width}}  {n:>7} {e:>7} {f:>8} {c:>7}")
    return 0


def _print_report(report: dict) -> None:
    for key, value in report.items():
        if key == "checksums":
            for fname, digest in value.items():
                print(f"  {fname}: sha256 {digest}")
        else:
            print(f"  {key}: {value}")


def _cmd_convert(args) -> int:
    out_dir = args.out if args.out is not None else args.name
    report = convert(args.name, out_dir, cache_dir=args.cache)
    print(f"converted '{args.name}' -> {out_dir}")
    _print_report(report)
    if not report["edges_match_published"]:
        print(
            f"  note: neither {report['edges_undirected']} undirected nor "
            f"{report['edges_directed']} directed edges equals the published "
            f"{report['expected_edges']}"
        )
    return 0


def _cmd_verify(args) -> int:
    report = verify(args.dir, expected_name=args.name)
    print(f"verified {args.dir}")
    _print_report(report)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dataset-converter",
        description="Fetch public graph benchmarks and write canonical dataset directories.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="show supported datasets and their published statistics")

    conv = sub.add_parser("convert", help="fetch one dataset and write its canonical directory")
    conv.add_argument("name", help="dataset name (see 'list')")
    conv.add_argument("--out", help="output directory (default: ./<name>)")
    conv.add_argument("--cache", help="archive cache directory (default: env or ~/.cache)")

    ver = sub.add_parser("verify", help="re-parse a canonical directory and check invariants")
    ver.add_argument("dir", help="canonical dataset directory")
    ver.add_argument("--name", help="require this dataset name in meta.json")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"list": _cmd_list, "convert": _cmd_convert, "verify": _cmd_verify}[args.command]
    try:
        return handler(args)
    except FetchError as e:
        print(f"error (retryable): {e}", file=sys.stderr)
        return EXIT_RETRYABLE
    except ConverterError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_HARD


if __name__ == "__main__":
    sys.exit(main())
