"""Command-line front end: measure, batch, rank, validate, serve.

Exit codes: 0 success, 1 domain/validation failure, 2 I/O failure, 3 usage.
The environment variable SDA_LOG (error|info|debug) controls log verbosity.
"""

from __future__ import annotations

import argparse
import glob as globmod
import json
import logging
import os
import socket
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .formats import (
    MalformedSyntaxError,
    SchemaError,
    csv_header,
    csv_row,
    parse_layout,
    render_report,
    report_to_dict,
    round4,
)
from .metrics import DetailReport, detail, rank
from .model import LayoutValidationError

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_IO = 2
EXIT_USAGE = 3

log = logging.getLogger("sda")

_LOG_LEVELS = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the contract reserves 2 for I/O.
    def error(self, message: str):
        raise UsageError(message)


def _err(message: str) -> None:
    print(message, file=sys.stderr)


def _load_report(path: str) -> tuple[DetailReport | None, int]:
    """Read, parse and measure one layout file; on failure print diagnostics
    to stderr and return the exit code."""
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        _err(f"{path}: {exc}")
        return None, EXIT_IO
    try:
        layout = parse_layout(data)
    except (MalformedSyntaxError, SchemaError) as exc:
        _err(f"{path}: {exc}")
        return None, EXIT_DOMAIN
    except LayoutValidationError as exc:
        for violation in exc.violations:
            _err(f"{path}: {violation.message}")
        return None, EXIT_DOMAIN
    return detail(layout), EXIT_OK


def cmd_measure(args: argparse.Namespace) -> int:
    report, code = _load_report(args.file)
    if report is None:
        return code
    sys.stdout.buffer.write(
        render_report(report, args.format, detail=args.detail, source=args.file)
    )
    sys.stdout.buffer.flush()
    return EXIT_OK


def cmd_batch(args: argparse.Namespace) -> int:
    files = sorted(globmod.glob(args.glob, recursive=True))
    if not files:
        raise UsageError(f"no files match {args.glob!r}")

    def work(path: str) -> tuple[str, DetailReport | None]:
        report, _ = _load_report(path)
        return path, report

    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        results = list(pool.map(work, files))

    succeeded = [(path, report) for path, report in results if report is not None]
    failed = len(results) - len(succeeded)

    if args.format == "csv":
        payload = csv_header() + "".join(csv_row(r, path) for path, r in succeeded)
    else:
        rows = [
            {"path": path, "objects": r.object_count, **report_to_dict(r)}
            for path, r in succeeded
        ]
        payload = json.dumps(rows, indent=2, ensure_ascii=False) + "\n"
    try:
        Path(args.out).write_text(payload, encoding="utf-8")
    except OSError as exc:
        _err(f"{args.out}: {exc}")
        return EXIT_IO
    log.info("batch: %d measured, %d failed -> %s", len(succeeded), failed, args.out)
    return EXIT_DOMAIN if failed else EXIT_OK


def cmd_rank(args: argparse.Namespace) -> int:
    if len(args.files) < 2:
        raise UsageError("rank needs at least 2 files")
    entries: list[tuple[str, float]] = []
    for path in args.files:
        report, code = _load_report(path)
        if report is None:
            return code
        entries.append((path, report.report.aesthetic_value))
    for entry in rank(entries):
        print(f"{entry.rank}\t{round4(entry.value)}\t{entry.id}")
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        data = Path(args.file).read_bytes()
    except OSError as exc:
        _err(f"{args.file}: {exc}")
        return EXIT_IO
    try:
        parse_layout(data)
    except MalformedSyntaxError as exc:
        print(f"{args.file}: syntax error: {exc}")
        return EXIT_DOMAIN
    except SchemaError as exc:
        print(f"{args.file}: schema error: {exc}")
        return EXIT_DOMAIN
    except LayoutValidationError as exc:
        for violation in exc.violations:
            print(f"{args.file}: {violation.message}")
        return EXIT_DOMAIN
    print("valid")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    if not (1 <= args.port <= 65535):
        raise UsageError(f"port must be in 1..65535, got {args.port}")
    app = create_app()
    if args.static is not None:
        from fastapi.staticfiles import StaticFiles

        static_dir = Path(args.static)
        if not static_dir.is_dir():
            _err(f"{args.static}: not a directory")
            return EXIT_IO
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    try:
        sock = socket.create_server((args.bind, args.port))
    except OSError as exc:
        _err(f"cannot bind {args.bind}:{args.port}: {exc}")
        return EXIT_IO
    log.info("serving on http://%s:%d", args.bind, args.port)
    config = uvicorn.Config(
        app,
        host=args.bind,
        port=args.port,
        log_level=_log_level_name(),
        access_log=True,
    )
    uvicorn.Server(config).run(sockets=[sock])
    return EXIT_OK


def _log_level_name() -> str:
    name = os.environ.get("SDA_LOG", "info").lower()
    return name if name in _LOG_LEVELS else "info"


def build_parser() -> _Parser:
    parser = _Parser(prog="sda", description="Measure screen-layout aesthetics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", help="measure one layout file")
    p.add_argument("file")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--detail", action="store_true")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("batch", help="measure every file matching a glob")
    p.add_argument("glob")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("rank", help="rank layouts by aesthetic value")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("validate", help="check a layout file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("serve", help="run the HTTP API (and optionally the UI)")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--bind", default="127.0.0.1")
    p.add_argument("--static", default=None, metavar="DIR")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=_LOG_LEVELS[_log_level_name()], format="%(levelname)s %(name)s %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be >= 1")
        return args.func(args)
    except UsageError as exc:
        _err(f"usage error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
