"""Single entry point: serve the API, tag a local file, or audit a portal.

Exit codes: 0 success, 1 pipeline/provider/portal failure, 2 usage or
configuration error. ``tag`` and ``serve`` honor ``--offline`` (or
``TAGIFY_PROVIDER_MODE=offline``) to run with the deterministic provider
and identity translator, performing zero network calls.
"""

from __future__ import annotations

import argparse
import csv
import json
import socket
import sys
from typing import Sequence

from . import __version__
from .audit import report_to_dict, run_audit, write_histogram_csv, write_report_json
from .config import AppConfig, build_providers, load_config
from .errors import (
    ConfigError,
    MalformedCatalogError,
    PortInUseError,
    PortalUnavailableError,
    ProviderError,
    TagifyError,
    TaggingFailedError,
)
from .llm import model_allowlist_detail
from .pipeline import MAX_TAG_COUNT, MIN_TAG_COUNT, TagRequest, TagSet, generate_tags
from .sampler import MAX_SAMPLE_ROWS, sample_csv
from .translate import ISO_639_1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tagify",
        description=(
            "Generate descriptive tags for tabular open-data files and audit"
            " tag coverage across a portal's catalog."
        ),
    )
    parser.add_argument("--version", action="version", version=f"tagify {__version__}")
    sub = parser.add_subparsers(dest="command")

    serve = sub.add_parser("serve", help="run the tagging HTTP service")
    serve.add_argument("--port", type=int, default=None, help="listen port (default 8000)")
    serve.add_argument("--host", default="0.0.0.0", help="listen address")
    serve.add_argument(
        "--offline",
        action="store_true",
        help="use the deterministic offline provider and identity translator",
    )

    tag = sub.add_parser("tag", help="tag a local delimited file")
    tag.add_argument("path", help="file to sample, or - for stdin")
    tag.add_argument("--count", type=int, default=5, help="number of tags (3-10)")
    tag.add_argument("--model", default="gpt-3.5-turbo", help="chat model to use")
    tag.add_argument("--dest-lang", default="et", help="translation target (ISO 639-1)")
    tag.add_argument(
        "--format", choices=("json", "csv"), default="json", help="output format"
    )
    tag.add_argument("--delimiter", default=",", help="cell delimiter (default comma)")
    tag.add_argument("--offline", action="store_true", help="no network, offline provider")

    audit = sub.add_parser("audit", help="measure tag coverage on a portal")
    audit.add_argument("--base-url", default=None, help="portal base URL")
    audit.add_argument("--limit", type=int, default=10000, help="max datasets to list")
    audit.add_argument("--out", default="coverage_report.json", help="report JSON path")
    audit.add_argument("--csv", default=None, help="also write histogram CSV here")
    audit.add_argument(
        "--max-in-flight", type=int, default=1, help="parallel detail fetches"
    )
    audit.add_argument(
        "--delay", type=float, default=0.0, help="politeness pause between fetches (s)"
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 0

    try:
        if args.command == "serve":
            return _cmd_serve(args)
        if args.command == "tag":
            return _cmd_tag(args)
        return _cmd_audit(args)
    except ConfigError as exc:
        for problem in exc.problems:
            print(f"tagify: config error: {problem}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        return 130


def _usage_error(message: str) -> int:
    print(f"tagify: error: {message}", file=sys.stderr)
    return 2


def _load(args: argparse.Namespace, **extra) -> AppConfig:
    overrides: dict[str, object] = dict(extra)
    if getattr(args, "offline", False):
        overrides["provider_mode"] = "offline"
    return load_config(overrides={k: v for k, v in overrides.items() if v is not None})


# --- serve -------------------------------------------------------------------


def check_port_free(host: str, port: int) -> None:
    """Probe-bind the listen address; raises PortInUseError when taken."""
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((host, port))
    except OSError as exc:
        raise PortInUseError(f"cannot bind {host}:{port}: {exc}") from exc
    finally:
        probe.close()


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .api import create_app

    config = _load(args, listen_port=args.port)
    try:
        check_port_free(args.host, config.listen_port)
    except PortInUseError as exc:
        print(f"tagify: {exc}", file=sys.stderr)
        return 1

    app = create_app(config)
    print(f"tagify serving on http://{args.host}:{config.listen_port}", file=sys.stderr)
    uvicorn.run(app, host=args.host, port=config.listen_port, log_level="warning")
    return 0


# --- tag ---------------------------------------------------------------------


def _cmd_tag(args: argparse.Namespace) -> int:
    if not MIN_TAG_COUNT <= args.count <= MAX_TAG_COUNT:
        return _usage_error(f"Count must be between {MIN_TAG_COUNT} and {MAX_TAG_COUNT}")
    if not ISO_639_1.fullmatch(args.dest_lang):
        return _usage_error("--dest-lang must be a two-letter lowercase code")
    if len(args.delimiter) != 1:
        return _usage_error("--delimiter must be a single character")

    config = _load(args)
    if args.model not in config.model_allowlist:
        return _usage_error(model_allowlist_detail(config.model_allowlist))

    try:
        if args.path == "-":
            sample = sample_csv(
                sys.stdin.buffer,
                delimiter=args.delimiter,
                max_rows=MAX_SAMPLE_ROWS,
                source_name="stdin",
            )
        else:
            with open(args.path, "rb") as handle:
                sample = sample_csv(
                    handle,
                    delimiter=args.delimiter,
                    max_rows=MAX_SAMPLE_ROWS,
                    source_name=args.path,
                )
    except FileNotFoundError:
        print(f"tagify: file not found: {args.path}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"tagify: cannot read {args.path}: {exc}", file=sys.stderr)
        return 2
    except TagifyError as exc:
        print(f"tagify: {exc}", file=sys.stderr)
        return 1

    request = TagRequest(
        sample=sample, count=args.count, model=args.model, dest_lang=args.dest_lang
    )
    llm, translator = build_providers(config)
    try:
        tag_set = generate_tags(request, llm, translator)
    except (TaggingFailedError, ProviderError) as exc:
        print(f"tagify: {exc}", file=sys.stderr)
        return 1

    if args.format == "csv":
        _print_tags_csv(tag_set)
    else:
        print(
            json.dumps(
                {
                    "english": tag_set.english,
                    "translated": tag_set.translated,
                    "warnings": tag_set.warnings,
                },
                indent=2,
                ensure_ascii=False,
            )
        )
    return 0


def _print_tags_csv(tag_set: TagSet) -> None:
    writer = csv.writer(sys.stdout)
    writer.writerow(["english", "translated"])
    translated = tag_set.translated or [""] * len(tag_set.english)
    for english, trans in zip(tag_set.english, translated):
        writer.writerow([english, trans])


# --- audit -------------------------------------------------------------------


def _cmd_audit(args: argparse.Namespace) -> int:
    if args.limit < 1:
        return _usage_error("--limit must be >= 1")
    if args.max_in_flight < 1:
        return _usage_error("--max-in-flight must be >= 1")

    config = _load(args, portal_base_url=args.base_url, provider_mode="offline")
    try:
        report = run_audit(
            config.portal_base_url,
            args.limit,
            max_in_flight=args.max_in_flight,
            delay=args.delay,
        )
    except (PortalUnavailableError, MalformedCatalogError) as exc:
        print(f"tagify: audit failed: {exc}", file=sys.stderr)
        return 1

    write_report_json(report, args.out)
    if args.csv:
        write_histogram_csv(report, args.csv)

    if report.pct_zero_tags is None:
        print("no datasets fetched; coverage percentages undefined")
    else:
        print(f"{report.pct_zero_tags}% untagged, {report.pct_one_tag}% single-tag")
    summary = report_to_dict(report)
    print(
        f"{summary['total']} datasets tallied,"
        f" {len(summary['errors_encountered'])} fetch errors;"
        f" report written to {args.out}"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
