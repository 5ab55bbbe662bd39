"""BibTeX entries for AI systems cited as tools."""

from __future__ import annotations

import datetime as dt
from typing import Iterable

from .errors import AidiscloseError, InvalidDate
from .facets import ToolRef


def _accessed(tool: ToolRef) -> str:
    value = tool.accessed
    if isinstance(value, dt.date):
        return value.isoformat()
    try:
        return dt.date.fromisoformat(value).isoformat()
    except (TypeError, ValueError):
        raise InvalidDate(f"{tool.cite_key}: access date {value!r} is not a calendar date (YYYY-MM-DD)") from None


def _braced(field: str, value: str) -> str:
    depth = 0
    for ch in value:
        depth += {"{": 1, "}": -1}.get(ch, 0)
        if depth < 0:
            break
    if depth != 0:
        raise AidiscloseError(f"unbalanced braces in {field} value {value!r}")
    return "{" + value + "}"


def make_bibtex(tool: ToolRef) -> str:
    """Render one ``@misc`` entry; fields come in the order author, title, year, url, note.

    An empty ``url`` or ``accessed`` drops that field.
    """
    key = tool.cite_key or ""
    if not key or any(ch.isspace() for ch in key) or any(ch in key for ch in "{},"):
        raise AidiscloseError(f"invalid cite key {key!r}")
    fields = [
        ("author", tool.author_or_vendor),
        ("title", tool.title),
        ("year", str(tool.year)),
    ]
    if tool.url:
        fields.append(("url", tool.url))
    if tool.accessed:
        fields.append(("note", f"Accessed: {_accessed(tool)}"))
    body = ",\n".join(f"  {name} = {_braced(name, value)}" for name, value in fields)
    return f"@misc{{{key},\n{body}\n}}"


def make_bibliography(tools: Iterable[ToolRef]) -> str:
    return "\n\n".join(make_bibtex(t) for t in tools) + "\n"
