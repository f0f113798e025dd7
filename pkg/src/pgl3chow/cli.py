"""Command line front end: run checks, print Hilbert tables, list the registry.

Exit status: 0 when every selected check passes, 1 when any check fails,
2 for usage or parse errors (unknown check names, bad config files), and 3
for internal errors.  Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

from . import checks
from .checks import CheckConfigError, Report, UnknownCheckError
from .config import ConfigError, UserConfig, load_config
from .presented import BUILTIN_PRESENTATIONS, RingPresentation, graded_component

REPORT_VERSION = "1"

REPORT_SCHEMA = {
    "type": "object",
    "required": ["version", "config_echo", "results", "summary"],
    "additionalProperties": False,
    "properties": {
        "version": {"type": "string"},
        "config_echo": {
            "type": "object",
            "required": ["selection", "format", "max_degree", "max_degree_overrides"],
            "additionalProperties": False,
            "properties": {
                "selection": {"type": "string"},
                "format": {"type": "string", "enum": ["text", "json"]},
                "max_degree": {"type": ["integer", "null"]},
                "max_degree_overrides": {
                    "type": "object",
                    "additionalProperties": {"type": "integer"},
                },
            },
        },
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "verdict", "paper_anchor", "witnesses",
                             "elapsed_ms"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "verdict": {"type": "string",
                                "enum": ["pass", "fail", "error"]},
                    "paper_anchor": {"type": "string"},
                    "witnesses": {
                        "type": "object",
                        "additionalProperties": {"type": "string"},
                    },
                    "elapsed_ms": {"type": "number"},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["pass", "fail", "error"],
            "additionalProperties": False,
            "properties": {
                "pass": {"type": "integer"},
                "fail": {"type": "integer"},
                "error": {"type": "integer"},
            },
        },
    },
}


@dataclass
class Config:
    """Effective CLI configuration after merging flags and the config file."""

    output_format: str = "text"
    max_degree: int | None = None
    max_degree_overrides: dict[str, int] = field(default_factory=dict)
    config_path: str | None = None


def _anchors() -> dict[str, str]:
    return {spec.name: spec.paper_anchor for spec in checks.list_checks()}


def render_report_json(report: Report, config: Config, selection: str) -> str:
    anchors = _anchors()
    payload = {
        "version": REPORT_VERSION,
        "config_echo": {
            "selection": selection,
            "format": config.output_format,
            "max_degree": config.max_degree,
            "max_degree_overrides": dict(config.max_degree_overrides),
        },
        "results": [
            {
                "name": r.name,
                "verdict": r.verdict,
                "paper_anchor": anchors[r.name],
                "witnesses": r.witness_dict(),
                "elapsed_ms": round(r.elapsed * 1000.0, 3),
            }
            for r in report.results
        ],
        "summary": report.counts,
    }
    return json.dumps(payload, indent=2, sort_keys=False)


def render_report_text(report: Report, config: Config, selection: str) -> str:
    lines = [f"# check report (selection: {selection})"]
    for r in report.results:
        lines.append(f"{r.name}: {r.verdict} ({r.elapsed * 1000.0:.1f} ms)")
        for label, value in r.witnesses:
            lines.append(f"    {label}: {value}")
    counts = report.counts
    lines.append(f"summary: {counts['pass']} pass, {counts['fail']} fail, "
                 f"{counts['error']} error")
    return "\n".join(lines)


def _resolve_presentation(spec: str, user: UserConfig | None) -> RingPresentation:
    if spec.startswith("builtin:"):
        name = spec.split(":", 1)[1]
        if name not in BUILTIN_PRESENTATIONS:
            raise ConfigError(f"unknown builtin presentation {name!r}; "
                              f"known: {', '.join(sorted(BUILTIN_PRESENTATIONS))}")
        return BUILTIN_PRESENTATIONS[name]()
    loaded = load_config(spec)
    if not loaded.presentations:
        raise ConfigError(f"config {spec!r} defines no presentation")
    if len(loaded.presentations) > 1:
        raise ConfigError(f"config {spec!r} defines several presentations "
                          f"({', '.join(sorted(loaded.presentations))}); "
                          f"define exactly one for hilbert")
    return next(iter(loaded.presentations.values()))


def cmd_check(args: argparse.Namespace, config: Config) -> int:
    selection = "--all" if args.all else args.name
    try:
        if args.all:
            overrides = dict(config.max_degree_overrides)
            report = checks.run_all(overrides, config.max_degree)
        else:
            bound = config.max_degree
            if bound is None:
                bound = config.max_degree_overrides.get(args.name)
            report = Report((checks.run_check(args.name, bound),))
    except UnknownCheckError as exc:
        print(f"error: unknown check {exc.args[0]!r}; run 'pgl3chow list'",
              file=sys.stderr)
        return 2
    except CheckConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if config.output_format == "json":
        print(render_report_json(report, config, selection))
    else:
        print(render_report_text(report, config, selection))
    return 0 if report.all_passed else 1


def cmd_hilbert(args: argparse.Namespace, config: Config,
                user: UserConfig | None) -> int:
    if args.max_degree < 0:
        print("error: --max-degree must be >= 0", file=sys.stderr)
        return 2
    try:
        pres = _resolve_presentation(args.spec, user)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for d in range(args.max_degree + 1):
        component = graded_component(pres, d)
        print(f"{d}: {component.render()}")
    return 0


def cmd_list(args: argparse.Namespace) -> int:
    for spec in checks.list_checks():
        print(f"{spec.name}: {spec.description} [anchor: {spec.paper_anchor}]")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pgl3chow",
        description="Exact verification of the computations behind the Chow "
                    "ring of the classifying stack of PGL3.")
    parser.add_argument("--config", metavar="PATH",
                        help="config file with options, groups, representations "
                             "and presentations")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run one check or the whole registry")
    which = p_check.add_mutually_exclusive_group(required=True)
    which.add_argument("--all", action="store_true", help="run every check")
    which.add_argument("--name", metavar="ID", help="run a single check")
    p_check.add_argument("--max-degree", type=int, metavar="N",
                         help="degree bound override for the selected checks")
    p_check.add_argument("--format", choices=("text", "json"),
                         help="report format (default text)")

    p_hilbert = sub.add_parser(
        "hilbert", help="graded components of a presented ring")
    p_hilbert.add_argument("--spec", required=True, metavar="PATH|builtin:NAME",
                           help="presentation source, e.g. builtin:Rstar")
    p_hilbert.add_argument("--max-degree", type=int, required=True, metavar="N")

    sub.add_parser("list", help="list the check registry with anchors")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if isinstance(code, int) else 2

    user: UserConfig | None = None
    if args.config:
        try:
            user = load_config(args.config)
        except ConfigError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2

    config = Config()
    if user is not None:
        config.config_path = args.config
        config.max_degree_overrides.update(user.max_degree_overrides)
        if user.output_format:
            config.output_format = user.output_format
    if getattr(args, "format", None):
        config.output_format = args.format
    if getattr(args, "max_degree", None) is not None and args.command == "check":
        if args.max_degree < 0:
            print("error: --max-degree must be >= 0", file=sys.stderr)
            return 2
        config.max_degree = args.max_degree

    try:
        if args.command == "check":
            return cmd_check(args, config)
        if args.command == "hilbert":
            return cmd_hilbert(args, config, user)
        if args.command == "list":
            return cmd_list(args)
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    return 2  # pragma: no cover - unreachable with required subcommands


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
