"""Command-line interface.

Exit codes: 0 success, 1 invalid gluing data, 2 unreadable input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .builtins import NAMES, builtin_example
from .construction import build_dual_complex
from .io import (
    ParseError,
    dumps,
    export_complex,
    export_off,
    format_report,
    parse_gluing_data,
    report_document,
)
from .slc_data import validate

EXIT_OK, EXIT_INVALID, EXIT_PARSE = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load(path, err):
    try:
        return parse_gluing_data(_read(path))
    except (OSError, ParseError) as exc:
        print(f"error: {path}: {exc}", file=err)
        return None


def _print_violations(report, err):
    for v in report.violations:
        print(f"{v.rule}: {v.message}", file=err)


def cmd_validate(args, out, err):
    data = _load(args.file, err)
    if data is None:
        return EXIT_PARSE
    report = validate(data)
    if report.violations:
        _print_violations(report, err)
        return EXIT_INVALID
    for w in report.warnings:
        print(f"warning {w.rule}: {w.message}", file=err)
    print("valid", file=out)
    return EXIT_OK


def cmd_build(args, out, err):
    data = _load(args.file, err)
    if data is None:
        return EXIT_PARSE
    report = validate(data)
    if report.violations:
        _print_violations(report, err)
        return EXIT_INVALID
    result = build_dual_complex(data)
    v, e, t = result.complex.counts()
    print(f"V={v} E={e} T={t} chi={v - e + t}", file=out)
    if args.complex:
        Path(args.complex).write_text(dumps(export_complex(result)), encoding="utf-8")
    if args.off:
        Path(args.off).write_text(export_off(result), encoding="utf-8")
    return EXIT_OK


def cmd_report(args, out, err):
    data = _load(args.file, err)
    if data is None:
        return EXIT_PARSE
    doc = report_document(data)
    if args.json:
        out.write(dumps(doc))
    else:
        out.write(format_report(doc))
    if doc["validation"]:
        _print_violations(validate(data), err)
        return EXIT_INVALID
    return EXIT_OK


def cmd_example(args, out, err):
    text = dumps(builtin_example(args.name))
    if args.write:
        Path(args.write).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slc-dual", description="Dual complexes of slc surfaces from normalization gluing data."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a gluing-data file")
    p.add_argument("file", help="input JSON ('-' for stdin)")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("build", help="construct the dual complex")
    p.add_argument("file")
    p.add_argument("--complex", metavar="OUT.json", help="write the full cell lists")
    p.add_argument("--off", metavar="OUT.off", help="write a cosmetic OFF mesh")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("report", help="invariants of the dual complex")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("example", help="print a builtin dataset")
    p.add_argument("name", choices=NAMES)
    p.add_argument("--write", metavar="FILE")
    p.set_defaults(func=cmd_example)
    return parser


def run_cli(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args, out, err)


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
