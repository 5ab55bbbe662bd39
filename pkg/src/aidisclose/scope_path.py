"""Locations in the document hierarchy and the scope label grammar.

Labels follow the forms ``document``, ``chapter <n>``, ``section <n-or-id>``,
``subsection <id>``, ``paragraph <n>``, ``figure <n>``, ``table <n>``,
``code <n>`` and ``references``. Nested locations join labels with ``/``::

    section 2 / paragraph 3

A label of an indexed kind written without its index (``section``) is
*unbound*; it refers to "the current section" and is bound later against a
context path (see :meth:`ScopePath.bind`).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Optional, Union

from .errors import InvalidScope


class ScopeKind(enum.Enum):
    DOCUMENT = "document"
    CHAPTER = "chapter"
    SECTION = "section"
    SUBSECTION = "subsection"
    PARAGRAPH = "paragraph"
    FIGURE = "figure"
    TABLE = "table"
    CODE = "code"
    REFERENCES = "references"

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def takes_index(self) -> bool:
        return self not in (ScopeKind.DOCUMENT, ScopeKind.REFERENCES)

    @property
    def numeric_only(self) -> bool:
        return self not in (ScopeKind.SECTION, ScopeKind.SUBSECTION)


_RANK = {ScopeKind.DOCUMENT: 0, ScopeKind.CHAPTER: 1, ScopeKind.SECTION: 2, ScopeKind.SUBSECTION: 3}
for _kind in ScopeKind:
    _kind._rank = _RANK.get(_kind, 4)  # leaves share the deepest rank
del _kind

Ident = Union[int, str, None]

_LABEL_RE = re.compile(r"([A-Za-z]+)(?:\s+([A-Za-z0-9][A-Za-z0-9._-]*))?", re.ASCII)


@dataclass(frozen=True)
class ScopeSegment:
    kind: ScopeKind
    ident: Ident = None

    @property
    def bound(self) -> bool:
        return self.ident is not None or not self.kind.takes_index

    def __str__(self) -> str:
        return self.kind.value if self.ident is None else f"{self.kind.value} {self.ident}"


DOCUMENT_SEGMENT = ScopeSegment(ScopeKind.DOCUMENT)


@dataclass(frozen=True)
class ScopePath:
    segments: tuple[ScopeSegment, ...] = ()

    def __post_init__(self):
        segs = self.segments
        if not segs:
            return
        if segs[0] != DOCUMENT_SEGMENT:
            raise InvalidScope(f"scope path must start at the document, got {segs[0]}")
        for parent, child in zip(segs, segs[1:]):
            if child.kind.rank <= parent.kind.rank:
                raise InvalidScope(f"{child} cannot be nested inside {parent}")

    @classmethod
    def document(cls) -> "ScopePath":
        return cls((DOCUMENT_SEGMENT,))

    @property
    def is_unscoped(self) -> bool:
        return not self.segments

    @property
    def bound(self) -> bool:
        return all(s.bound for s in self.segments)

    @property
    def leaf(self) -> Optional[ScopeSegment]:
        return self.segments[-1] if self.segments else None

    def child(self, kind: ScopeKind, ident: Ident = None) -> "ScopePath":
        base = self.segments or (DOCUMENT_SEGMENT,)
        seg = ScopeSegment(kind, ident)
        if seg.kind.rank <= base[-1].kind.rank:
            raise InvalidScope(f"{seg} cannot be nested inside {base[-1]}")
        # the prefix is already valid, so skip re-checking it
        path = object.__new__(ScopePath)
        object.__setattr__(path, "segments", base + (seg,))
        return path

    def ancestors(self) -> list["ScopePath"]:
        """Every prefix path from the document down to (and including) this one."""
        return [ScopePath(self.segments[:n]) for n in range(1, len(self.segments) + 1)]

    def bind(self, context: "ScopePath") -> "ScopePath":
        """Resolve this (possibly relative, possibly unbound) path against ``context``.

        The result keeps the part of ``context`` that is shallower than this
        path's first label; unbound labels take the same-kind segment of
        ``context``.
        """
        if not self.segments:
            return self
        ctx = context.segments or (DOCUMENT_SEGMENT,)
        own = self.segments[1:]
        if not own:
            return self
        first_rank = own[0].kind.rank
        prefix = tuple(s for s in ctx if s.kind.rank < first_rank)
        out = []
        for seg in own:
            if not seg.bound:
                match = next((c for c in ctx if c.kind is seg.kind), None)
                if match is None:
                    raise InvalidScope(f"bare '{seg.kind.value}' label has no context to bind to")
                seg = match
            out.append(seg)
        return ScopePath(prefix + tuple(out))

    def __str__(self) -> str:
        if not self.segments:
            return ""
        if len(self.segments) == 1:
            return str(self.segments[0])
        return " / ".join(str(s) for s in self.segments[1:])


def _parse_label(label: str) -> ScopeSegment:
    m = _LABEL_RE.fullmatch(label)
    if not m:
        raise InvalidScope(f"cannot parse scope label {label!r}")
    name, ident = m.groups()
    try:
        kind = ScopeKind(name.lower())
    except ValueError:
        raise InvalidScope(f"unknown scope kind {name!r}") from None
    if ident is None:
        return ScopeSegment(kind)
    if not kind.takes_index:
        raise InvalidScope(f"'{kind.value}' does not take an index")
    if ident.isdigit():
        return ScopeSegment(kind, int(ident))
    if kind.numeric_only:
        raise InvalidScope(f"'{kind.value}' needs a numeric index, got {ident!r}")
    return ScopeSegment(kind, ident)


def parse_scope(text: str) -> ScopePath:
    text = text.strip()
    if not text:
        raise InvalidScope("empty scope label")
    segs = [_parse_label(part.strip()) for part in text.split("/")]
    if segs[0] != DOCUMENT_SEGMENT:
        segs.insert(0, DOCUMENT_SEGMENT)
    return ScopePath(tuple(segs))
