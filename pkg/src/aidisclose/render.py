"""Non-prose renderings: SVG badges, the LaTeX command, HTML, JSON and line exports."""

from __future__ import annotations

import datetime as dt
import enum
import html
import json
from dataclasses import dataclass, replace
from typing import Iterable, Optional

from .disclosure import DisclosureProfile, TemplateRegistry
from .errors import AidiscloseError, CoreNotSupported, InvalidScope, SchemaError
from .facets import AnnotationRecord, EvidenceRef, FacetKind, ToolRef
from .grid import GridToken, parse_grid, serialize_grid, tokens_of
from .scope_path import ScopePath, parse_scope

JSON_VERSION = "1"


class BadgeStyle(enum.Enum):
    COMPACT = "compact"
    LABELED = "labeled"


@dataclass(frozen=True)
class BadgeSpec:
    tokens: tuple[GridToken, ...]
    style: BadgeStyle
    cell_widths: tuple[int, ...]
    height: int

    @property
    def width(self) -> int:
        return sum(self.cell_widths)


_CHAR_W = 8
_LABEL_CHAR_W = 6


def badge_spec(record: AnnotationRecord, style: BadgeStyle = BadgeStyle.COMPACT) -> BadgeSpec:
    tokens = tuple(tokens_of(record))
    widths = []
    for tok in tokens:
        w = 12 + _CHAR_W * len(str(tok))
        if style is BadgeStyle.LABELED:
            w = max(w, 10 + _LABEL_CHAR_W * len(FacetKind(tok.facet_letter).label))
        widths.append(w)
    return BadgeSpec(tokens, style, tuple(widths), 20 if style is BadgeStyle.COMPACT else 36)


def _fill(tok: GridToken) -> tuple[str, str]:
    """Cell background darkens with the level; returns (fill, text colour)."""
    frac = tok.level / FacetKind(tok.facet_letter).max_level
    lo, hi = (0xEE, 0xEE, 0xEE), (0x2C, 0x4A, 0x7E)
    rgb = "".join(f"{round(a + (b - a) * frac):02x}" for a, b in zip(lo, hi))
    return f"#{rgb}", "#ffffff" if frac > 0.5 else "#111111"


def render_badge(record: AnnotationRecord, style: BadgeStyle = BadgeStyle.COMPACT) -> str:
    spec = badge_spec(record, BadgeStyle(style))
    grid = serialize_grid(record)
    h = spec.height
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{spec.width}" height="{h}" '
        f'role="img" aria-label="{grid}">',
        f"<title>{grid}</title>",
        '<g font-family="DejaVu Sans Mono,Menlo,monospace" text-anchor="middle">',
    ]
    x = 0
    for tok, w in zip(spec.tokens, spec.cell_widths):
        fill, ink = _fill(tok)
        cx = x + w / 2
        out.append(f'<rect x="{x}" y="0" width="{w}" height="{h}" fill="{fill}" stroke="#555555"/>')
        if spec.style is BadgeStyle.LABELED:
            label = FacetKind(tok.facet_letter).label
            out.append(f'<text x="{cx:g}" y="12" font-size="9" fill="{ink}">{label}</text>')
            out.append(f'<text x="{cx:g}" y="29" font-size="12" fill="{ink}">{tok}</text>')
        else:
            out.append(f'<text x="{cx:g}" y="14" font-size="12" fill="{ink}">{tok}</text>')
        x += w
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_latex(record: AnnotationRecord) -> str:
    if not record.is_extended:
        raise CoreNotSupported(r"\aitextsection takes six arguments; core records have three")
    return r"\aitextsection" + "".join("{" + str(t) + "}" for t in tokens_of(record))


def render_html(record: AnnotationRecord, registry: Optional[TemplateRegistry] = None) -> str:
    registry = registry or TemplateRegistry.default()
    grid = serialize_grid(record)
    sentences = [registry.fragment(fl.facet, fl.level, DisclosureProfile.EXPLANATORY)
                 for fl in record.facet_levels]
    alt = " ".join(sentences)
    esc = html.escape
    parts = [f'<span class="aidisclose" data-aidisclose="{grid}" role="img" '
             f'aria-label="{esc(alt)}" title="{grid}">']
    for tok, sentence in zip(tokens_of(record), sentences):
        parts.append(f'<span class="aidisclose-cell" data-facet="{tok.facet_letter}" '
                     f'title="{esc(sentence)}">{tok}</span>')
    if record.tools:
        cites = ", ".join(
            f'<cite data-cite-key="{esc(t.cite_key)}">{esc(t.author_or_vendor)}, '
            f"{esc(t.title)} ({t.year})</cite>"
            for t in record.tools)
        parts.append(f'<span class="aidisclose-tools">Tools: {cites}</span>')
    parts.append(f'<code class="aidisclose-grid">{grid}</code>')
    parts.append("</span>")
    return "".join(parts)


# -- machine-readable export ---------------------------------------------------

def _date_text(value) -> str:
    return value.isoformat() if isinstance(value, dt.date) else (value or "")


def _entry(scope: ScopePath, record: AnnotationRecord) -> dict:
    return {
        "scope": str(scope),
        "grid": serialize_grid(record),
        "levels": {fl.facet.letter: fl.level for fl in record.facet_levels},
        "qualifiers": [q.code for q in record.qualifiers],
        "tools": [
            {
                "cite_key": t.cite_key,
                "author": t.author_or_vendor,
                "title": t.title,
                "year": t.year,
                "url": t.url,
                "accessed": _date_text(t.accessed),
            }
            for t in record.tools
        ],
        "evidence": [{"description": e.description, "location": e.location} for e in record.evidence],
    }


def export_json(records: Iterable[tuple[ScopePath, AnnotationRecord]]) -> str:
    doc = {
        "aidisclose_version": JSON_VERSION,
        "annotations": [_entry(scope, rec) for scope, rec in records],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def import_json(text: str) -> list[tuple[ScopePath, AnnotationRecord]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("aidisclose_version") != JSON_VERSION:
        raise SchemaError(f"expected aidisclose_version {JSON_VERSION!r}")
    out = []
    for n, entry in enumerate(doc.get("annotations", [])):
        try:
            out.append(_import_entry(entry))
        except AidiscloseError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"annotation {n}: {exc!r}") from exc
    return out


def _import_entry(entry: dict) -> tuple[ScopePath, AnnotationRecord]:
    scope = parse_scope(entry["scope"]) if entry["scope"] else ScopePath()
    record = parse_grid(entry["grid"])
    levels = {fl.facet.letter: fl.level for fl in record.facet_levels}
    if entry.get("levels", levels) != levels:
        raise SchemaError(f"levels {entry['levels']} disagree with grid {entry['grid']}")
    if sorted(entry.get("qualifiers", [])) != sorted(q.code for q in record.qualifiers):
        raise SchemaError(f"qualifiers disagree with grid {entry['grid']}")
    tools = tuple(
        ToolRef(t["author"], t["title"], int(t["year"]), t.get("url", ""),
                _parse_date_lenient(t.get("accessed", "")), t["cite_key"])
        for t in entry.get("tools", []))
    evidence = tuple(EvidenceRef(e["description"], e.get("location")) for e in entry.get("evidence", []))
    return scope, replace(record, scope=scope, tools=tools, evidence=evidence)


def _parse_date_lenient(text: str):
    try:
        return dt.date.fromisoformat(text)
    except (TypeError, ValueError):
        return text


def export_gridfile(records: Iterable[tuple[ScopePath, AnnotationRecord]]) -> str:
    """One ``scope: grid`` line per annotation; readable by the grid-file scanner."""
    lines = ["# aidisclose grid file"]
    for scope, rec in records:
        if scope.is_unscoped or not scope.bound:
            raise InvalidScope(f"cannot export unbound scope {str(scope)!r} to a grid file")
        lines.append(f"{scope}: {serialize_grid(rec)}")
    return "\n".join(lines) + "\n"


def render_markdown_comment(scope: ScopePath, record: AnnotationRecord) -> str:
    return f"<!-- aidisclose: {scope}: {serialize_grid(record)} -->"
