"""Command-line interface.

Exit codes: 0 success, 1 validation or semantic failure, 2 usage or I/O failure.
Artifacts go to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import __version__
from .citation import make_bibliography
from .disclosure import DisclosureProfile, TemplateRegistry, generate_disclosure
from .document import (
    DuplicateAnnotationWarning,
    ScanFormat,
    ScannedAnnotation,
    ScanResult,
    aggregate,
    build_tree,
    resolve_effective,
    scan_document,
)
from .errors import AidiscloseError, CoreNotSupported, InvalidDate, NoAnnotations, RegistryError
from .facets import Finding, validate_record
from .grid import serialize_grid
from .registry import ExtensionRegistry, load_registry, parse_registry, registry_path_from_env
from .render import (
    BadgeStyle,
    export_gridfile,
    export_json,
    import_json,
    render_badge,
    render_html,
    render_latex,
)
from .scope_path import ScopePath, parse_scope

OK, FAILED, USAGE = 0, 1, 2

_EXTENSIONS = {".md": "markdown", ".markdown": "markdown", ".tex": "latex", ".json": "json"}


class CliExit(Exception):
    def __init__(self, code: int, message: str = ""):
        self.code = code
        self.message = message


@dataclass(frozen=True)
class CliConfig:
    registry_path: Optional[str]
    strict: bool
    output_format: str

    @classmethod
    def from_args(cls, args) -> "CliConfig":
        return cls(args.registry or registry_path_from_env(), args.strict,
                   getattr(args, "output_format", "text"))


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read_input(path: Optional[str]) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise CliExit(USAGE, f"cannot read {path}: {exc}") from exc


def _format_for(args) -> str:
    if args.format:
        return args.format
    if args.input not in (None, "-"):
        return _EXTENSIONS.get(Path(args.input).suffix.lower(), "grid")
    return "grid"


def _load(args) -> ScanResult:
    """Scan the input document, or import it when it is a JSON export."""
    text = _read_input(args.input)
    fmt = _format_for(args)
    if fmt != "json":
        return scan_document(text, ScanFormat(fmt))
    try:
        pairs = import_json(text)
    except AidiscloseError as exc:
        return ScanResult(errors=[Finding("schema-error", str(exc))])
    return ScanResult([ScannedAnnotation(0, scope, rec) for scope, rec in pairs])


def _registry(args) -> Optional[ExtensionRegistry]:
    path = CliConfig.from_args(args).registry_path
    if not path:
        return None
    try:
        return load_registry(path)
    except RegistryError as exc:
        raise CliExit(USAGE, str(exc)) from exc


def _scan(args) -> ScanResult:
    result = _load(args)
    for finding in result.errors:
        _err(f"error: {finding}")
    if result.errors:
        raise CliExit(FAILED)
    return result


def _tree(args, result: ScanResult, extra: Optional[ScopePath] = None):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", DuplicateAnnotationWarning)
        tree = build_tree(result.pairs)
    for w in caught:
        _err(f"warning: {w.message}")
    if caught and args.strict:
        raise CliExit(FAILED, "warnings promoted to errors (--strict)")
    if extra is not None:
        tree = tree.ensure(extra)
    return tree


def _scope_arg(args) -> ScopePath:
    try:
        scope = parse_scope(args.scope).bind(ScopePath.document())
    except AidiscloseError as exc:
        raise CliExit(USAGE, f"--scope: {exc}") from exc
    return scope


def _resolve(args):
    registry = _registry(args)
    result = _scan(args)
    scope = _scope_arg(args)
    record = resolve_effective(_tree(args, result, scope), scope)
    if record is None:
        raise CliExit(FAILED, f"no annotation resolves at scope {scope}")
    return record, registry, result


def cmd_validate(args) -> int:
    registry = _registry(args)
    result = _load(args)
    errors = [f"line {f.line}: error {f.code}: {f.message}" for f in result.errors]
    warns = []
    for entry in result.entries:
        report = validate_record(entry.record, registry)
        errors += [f"line {entry.line}: error {f.code}: {f.message}" for f in report.errors]
        warns += [f"line {entry.line}: warning {f.code}: {f.message}" for f in report.warnings]
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", DuplicateAnnotationWarning)
        try:
            build_tree(result.pairs)
        except AidiscloseError as exc:
            errors.append(f"error: {exc}")
    warns += [f"warning duplicate-annotation: {w.message}" for w in caught]
    for line in errors + warns:
        print(line)
    print(f"{len(result.entries)} annotation(s), {len(errors)} error(s), {len(warns)} warning(s)")
    if errors or (warns and args.strict):
        return FAILED
    return OK


def cmd_disclose(args) -> int:
    record, registry, _ = _resolve(args)
    templates = TemplateRegistry.from_extension(registry)
    print(generate_disclosure(record, DisclosureProfile(args.profile), templates))
    return OK


def cmd_aggregate(args) -> int:
    result = _scan(args)
    try:
        record = aggregate(_tree(args, result))
    except NoAnnotations as exc:
        raise CliExit(FAILED, str(exc)) from exc
    print(serialize_grid(record))
    return OK


def _emit(args, text: str) -> None:
    if args.output:
        try:
            Path(args.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise CliExit(USAGE, f"cannot write {args.output}: {exc}") from exc
    else:
        sys.stdout.write(text)


def cmd_render(args) -> int:
    fmt = args.output_format
    if fmt == "json":
        _emit(args, export_json(_scan(args).pairs))
        return OK
    if fmt == "bibtex":
        raise CliExit(USAGE, "use the 'cite' command for bibtex output")
    record, registry, _ = _resolve(args)
    if fmt == "svg":
        out = render_badge(record, BadgeStyle(args.style))
    elif fmt == "latex":
        try:
            out = render_latex(record) + "\n"
        except CoreNotSupported as exc:
            raise CliExit(USAGE, str(exc)) from exc
    elif fmt == "html":
        out = render_html(record, TemplateRegistry.from_extension(registry)) + "\n"
    else:
        out = serialize_grid(record) + "\n"
    _emit(args, out)
    return OK


def cmd_scan(args) -> int:
    result = _load(args)
    for finding in result.errors:
        _err(f"error: {finding}")
    if args.output_format == "json":
        _emit(args, export_json(result.pairs))
    else:
        _emit(args, export_gridfile(result.pairs))
    return FAILED if result.errors else OK


def cmd_cite(args) -> int:
    if args.input is not None:
        try:
            tools = parse_registry(_read_input(args.input), source=args.input).tools
        except RegistryError as exc:
            raise CliExit(USAGE, str(exc)) from exc
    else:
        registry = _registry(args)
        if registry is None:
            raise CliExit(USAGE, "cite needs a tool file or --registry")
        tools = registry.tools
    if not tools:
        raise CliExit(FAILED, "no [tool:<key>] entries found")
    try:
        _emit(args, make_bibliography(tools))
    except InvalidDate as exc:
        raise CliExit(FAILED, str(exc)) from exc
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="input file (default: stdin)")
    common.add_argument("--format", choices=[f.value for f in ScanFormat] + ["json"],
                        help="input format (default: from extension, else grid)")
    common.add_argument("--registry", help="extension registry file (fallback: $AIDISCLOSE_REGISTRY)")
    common.add_argument("--strict", action="store_true", help="treat warnings as errors")

    scoped = argparse.ArgumentParser(add_help=False)
    scoped.add_argument("--scope", default="document", help="scope to resolve (default: document)")

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("-o", "--output", help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="aidisclose", description="Faceted AI-use disclosure annotations.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check annotations in a file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("disclose", parents=[common, scoped], help="print a prose disclosure")
    p.add_argument("--profile", choices=[p.value for p in DisclosureProfile], default="explanatory")
    p.set_defaults(func=cmd_disclose)

    p = sub.add_parser("aggregate", parents=[common], help="print the per-facet maximum as a grid")
    p.set_defaults(func=cmd_aggregate)

    p = sub.add_parser("render", parents=[common, scoped, out], help="render a badge, LaTeX, HTML, JSON or grid")
    p.add_argument("--output-format", choices=["text", "svg", "latex", "html", "json", "bibtex"], default="text")
    p.add_argument("--style", choices=[s.value for s in BadgeStyle], default="compact")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("scan", parents=[common, out], help="list every annotation found in a document")
    p.add_argument("--output-format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("cite", parents=[common, out], help="print BibTeX entries for [tool:<key>] sections")
    p.set_defaults(func=cmd_cite)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except CliExit as exc:
        if exc.message:
            _err(f"error: {exc.message}")
        return exc.code
    except AidiscloseError as exc:
        _err(f"error: {exc}")
        return FAILED


if __name__ == "__main__":
    sys.exit(main())
