"""Document hierarchy: attaching records, inheritance, aggregation, and source scanning."""

from __future__ import annotations

import enum
import re
import warnings
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Optional

from .errors import AidiscloseError, InvalidScope, NoAnnotations, ScopeNotFound
from .facets import (
    CORE_FACETS,
    EXTENDED_FACETS,
    AnnotationRecord,
    EvidenceRef,
    Finding,
    ToolRef,
    annotation,
)
from .grid import parse_grid, parse_scoped_line
from .scope_path import DOCUMENT_SEGMENT, ScopeKind, ScopePath, ScopeSegment, parse_scope


class DuplicateAnnotationWarning(UserWarning):
    """A node that already carried a record was annotated again (last writer wins)."""


@dataclass(frozen=True)
class SegmentNode:
    segment: ScopeSegment
    children: tuple["SegmentNode", ...] = ()
    record: Optional[AnnotationRecord] = None

    def child(self, segment: ScopeSegment) -> Optional["SegmentNode"]:
        for c in self.children:
            if c.segment == segment:
                return c
        return None


@dataclass(frozen=True)
class DocumentTree:
    root: SegmentNode = field(default_factory=lambda: SegmentNode(DOCUMENT_SEGMENT))

    @classmethod
    def from_scopes(cls, scopes: Iterable[ScopePath]) -> "DocumentTree":
        builder = _Builder()
        for s in scopes:
            builder.slot(_bound_segments(s))
        return cls(builder.freeze())

    def ensure(self, scope: ScopePath) -> "DocumentTree":
        """Return a tree in which every node along ``scope`` exists."""
        segs = _bound_segments(scope)
        return DocumentTree(_update(self.root, segs, lambda n: n, create=True))

    def node(self, scope: ScopePath) -> SegmentNode:
        node = self.root
        for seg in _bound_segments(scope):
            nxt = node.child(seg)
            if nxt is None:
                raise ScopeNotFound(f"no segment at {scope}")
            node = nxt
        return node

    def __contains__(self, scope: ScopePath) -> bool:
        try:
            self.node(scope)
        except (ScopeNotFound, InvalidScope):
            return False
        return True

    def walk(self) -> Iterator[tuple[ScopePath, SegmentNode]]:
        """Depth-first (pre-order) traversal yielding each node with its path."""
        stack = [((DOCUMENT_SEGMENT,), self.root)]
        while stack:
            segs, node = stack.pop()
            yield ScopePath(segs), node
            for c in reversed(node.children):
                stack.append((segs + (c.segment,), c))

    def records(self) -> list[AnnotationRecord]:
        return [n.record for _, n in self.walk() if n.record is not None]


def _bound_segments(scope: ScopePath) -> tuple[ScopeSegment, ...]:
    if scope.is_unscoped:
        raise InvalidScope("cannot locate an unscoped path in a document tree")
    if not scope.bound:
        raise InvalidScope(f"scope {scope} has an unbound label")
    return scope.segments[1:]


def _update(node: SegmentNode, segs, fn, create: bool) -> SegmentNode:
    if not segs:
        return fn(node)
    head, rest = segs[0], segs[1:]
    children = list(node.children)
    for i, c in enumerate(children):
        if c.segment == head:
            children[i] = _update(c, rest, fn, create)
            return replace(node, children=tuple(children))
    if not create:
        raise ScopeNotFound(f"no segment {head} under {node.segment}")
    children.append(_update(SegmentNode(head), rest, fn, create))
    return replace(node, children=tuple(children))


class _Builder:
    """Mutable scratch tree for bulk construction; frozen into SegmentNodes once."""

    def __init__(self, segment: ScopeSegment = DOCUMENT_SEGMENT):
        self.segment = segment
        self.record: Optional[AnnotationRecord] = None
        self.children: dict[ScopeSegment, "_Builder"] = {}

    def slot(self, segs) -> "_Builder":
        node = self
        for seg in segs:
            nxt = node.children.get(seg)
            if nxt is None:
                nxt = node.children[seg] = _Builder(seg)
            node = nxt
        return node

    def freeze(self) -> SegmentNode:
        return SegmentNode(self.segment, tuple(c.freeze() for c in self.children.values()), self.record)


def attach(tree: DocumentTree, scope: ScopePath, record: AnnotationRecord) -> DocumentTree:
    segs = _bound_segments(scope)
    record = replace(record, scope=ScopePath((DOCUMENT_SEGMENT,) + segs))

    def put(node: SegmentNode) -> SegmentNode:
        if node.record is not None:
            warnings.warn(f"{scope} already annotated; replacing its record",
                          DuplicateAnnotationWarning, stacklevel=4)
        return replace(node, record=record)

    try:
        return DocumentTree(_update(tree.root, segs, put, create=False))
    except ScopeNotFound:
        raise ScopeNotFound(f"no segment at {scope}") from None


def build_tree(pairs: Iterable[tuple[ScopePath, AnnotationRecord]]) -> DocumentTree:
    """Create the nodes named by ``pairs`` and attach each record in order."""
    builder = _Builder()
    for scope, record in pairs:
        segs = _bound_segments(scope)
        node = builder.slot(segs)
        if node.record is not None:
            warnings.warn(f"{scope} already annotated; replacing its record",
                          DuplicateAnnotationWarning, stacklevel=2)
        node.record = replace(record, scope=ScopePath((DOCUMENT_SEGMENT,) + segs))
    return DocumentTree(builder.freeze())


def resolve_effective(tree: DocumentTree, scope: ScopePath) -> Optional[AnnotationRecord]:
    """Record on the node itself, else on its nearest annotated ancestor."""
    segs = _bound_segments(scope)
    node = tree.root
    found = node.record
    for seg in segs:
        node = node.child(seg)
        if node is None:
            raise ScopeNotFound(f"no segment at {scope}")
        if node.record is not None:
            found = node.record
    return found


class AggregationPolicy(enum.Enum):
    MAX_PER_FACET = "max"


def aggregate(tree: DocumentTree,
              policy: AggregationPolicy = AggregationPolicy.MAX_PER_FACET) -> AnnotationRecord:
    """Summarise every attached record as one document-scope record.

    Each facet takes its maximum level; core records do not vote on
    Intent, Control or Traceability. The result is extended iff any input is.
    Qualifiers are dropped; tools and evidence are unioned in first-seen order.
    """
    if policy is not AggregationPolicy.MAX_PER_FACET:
        raise ValueError(f"unsupported aggregation policy {policy}")
    records = tree.records()
    if not records:
        raise NoAnnotations("document has no annotations to aggregate")

    best: dict = {}
    for rec in records:
        for fl in rec.facet_levels:
            if fl.level > best.get(fl.facet, -1):
                best[fl.facet] = fl.level
    extended = any(r.is_extended for r in records)
    facets = EXTENDED_FACETS if extended else CORE_FACETS

    tools: dict[str, ToolRef] = {}
    evidence: dict[str, EvidenceRef] = {}
    for rec in records:
        for t in rec.tools:
            tools.setdefault(t.cite_key, t)
        for ev in rec.evidence:
            evidence.setdefault(ev.description, ev)

    return AnnotationRecord(
        annotation(*(best[k] for k in facets)),
        scope=ScopePath.document(),
        tools=tuple(tools.values()),
        evidence=tuple(evidence.values()),
    )


# -- scanning -----------------------------------------------------------------

class ScanFormat(enum.Enum):
    GRID = "grid"
    MARKDOWN = "markdown"
    LATEX = "latex"


@dataclass(frozen=True)
class ScannedAnnotation:
    line: int
    scope: ScopePath
    record: AnnotationRecord


@dataclass
class ScanResult:
    entries: list[ScannedAnnotation] = field(default_factory=list)
    errors: list[Finding] = field(default_factory=list)

    @property
    def pairs(self) -> list[tuple[ScopePath, AnnotationRecord]]:
        return [(e.scope, e.record) for e in self.entries]

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.entries)


class _Scanner:
    def __init__(self):
        self.result = ScanResult()
        self.context = ScopePath.document()

    def error(self, lineno: int, exc: Exception) -> None:
        self.result.errors.append(Finding(_error_code(exc), str(exc), lineno))

    def directive(self, lineno: int, body: str) -> None:
        body = body.strip()
        try:
            if body.startswith("@context"):
                self.context = parse_scope(body[len("@context"):]).bind(ScopePath.document())
                if not self.context.bound:
                    raise InvalidScope(f"context {self.context} must be fully indexed")
                return
            scope, record = parse_scoped_line(body)
            self.add(lineno, scope.bind(self.context), record)
        except AidiscloseError as exc:
            self.error(lineno, exc)

    def add(self, lineno: int, scope: ScopePath, record: AnnotationRecord) -> None:
        self.result.entries.append(ScannedAnnotation(lineno, scope, replace(record, scope=scope)))


def _error_code(exc: Exception) -> str:
    return re.sub(r"(?<!^)(?=[A-Z])", "-", type(exc).__name__).lower()


_MD_COMMENT = re.compile(r"<!--\s*aidisclose:(.*?)-->")
_TEX_DIRECTIVE = re.compile(r"^\s*%\s*aidisclose:(.*)$")
_TEX_COMMENT = re.compile(r"(?<!\\)%.*")
_TEX_EVENT = re.compile(
    r"\\(?P<sect>chapter|section|subsection)\*?\s*(?:\[[^\]]*\])?\s*\{"
    r"|\\aitextsection" + r"\s*\{([^{}]*)\}" * 6
)


def _scan_grid(text: str, sc: _Scanner) -> None:
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s and not s.startswith("#"):
            sc.directive(lineno, s)


def _scan_markdown(text: str, sc: _Scanner) -> None:
    for lineno, line in enumerate(text.splitlines(), 1):
        for m in _MD_COMMENT.finditer(line):
            sc.directive(lineno, m.group(1))


def _scan_latex(text: str, sc: _Scanner) -> None:
    chapter = section = subsection = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        m = _TEX_DIRECTIVE.match(line)
        if m:
            sc.directive(lineno, m.group(1))
            continue
        for ev in _TEX_EVENT.finditer(_TEX_COMMENT.sub("", line)):
            kind = ev.group("sect")
            if kind == "chapter":
                chapter, section, subsection = chapter + 1, 0, 0
            elif kind == "section":
                section, subsection = section + 1, 0
            elif kind == "subsection":
                subsection += 1
            if kind:
                path = ScopePath.document()
                if chapter:
                    path = path.child(ScopeKind.CHAPTER, chapter)
                if section:
                    path = path.child(ScopeKind.SECTION, section)
                if subsection:
                    path = path.child(ScopeKind.SUBSECTION, subsection)
                sc.context = path
                continue
            args = [a.strip() for a in ev.groups()[1:]]
            try:
                record = parse_grid("|" + "|".join(args) + "|")
            except AidiscloseError as exc:
                sc.error(lineno, exc)
            else:
                sc.add(lineno, sc.context, record)


_SCANNERS = {
    ScanFormat.GRID: _scan_grid,
    ScanFormat.MARKDOWN: _scan_markdown,
    ScanFormat.LATEX: _scan_latex,
}


def scan_document(source: str, fmt: ScanFormat = ScanFormat.GRID) -> ScanResult:
    """Extract every annotation in ``source`` in source order.

    Parse failures are collected in ``result.errors`` with line numbers and
    scanning continues. Grid files and Markdown comments accept
    ``@context <scope>`` lines that bind bare labels such as ``section:``;
    in LaTeX the context follows the latest sectioning command.
    """
    sc = _Scanner()
    _SCANNERS[ScanFormat(fmt)](source, sc)
    return sc.result
