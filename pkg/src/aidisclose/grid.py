"""Parser and serializer for the inline grid notation, e.g. ``|F4|G4|E2|I4|C2|T2|``.

Grammar::

    grid         := '|' token ( '|' token )* '|'      (3 or 6 tokens)
    token        := facet_letter level_digit qualifier?
    facet_letter := F | G | E | I | C | T            (ASCII, any case)
    level_digit  := 0..9                             (range-checked per facet)
    qualifier    := A..Z
    scoped_line  := scope_label ':' ws* grid
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Optional, Union

from .errors import (
    DuplicateFacet,
    MalformedGrid,
    MissingColon,
    UnknownFacet,
    WrongArity,
    WrongFacetOrder,
)
from .facets import (
    CORE_FACETS,
    EXTENDED_FACETS,
    AnnotationRecord,
    FacetLevel,
    Qualifier,
    annotation_from_facet_levels,
)
from .scope_path import ScopePath, parse_scope

_TOKEN_RE = re.compile(r"([A-Za-z])([0-9])([A-Za-z]?)", re.ASCII)
_FACET_LETTERS = frozenset("FGEICT")


# Whole-grid patterns for well-formed input in canonical facet order.
# Anything they reject goes through the cell-by-cell diagnostic path.
def _grid_pattern(facets) -> "re.Pattern[str]":
    cells = "".join(f"([{k.letter}{k.letter.lower()}])([0-9])([A-Za-z]?)\\|" for k in facets)
    return re.compile(r"\s*\|" + cells + r"\s*", re.ASCII)


_FAST = tuple((_grid_pattern(facets), facets) for facets in (EXTENDED_FACETS, CORE_FACETS))


@dataclass(frozen=True)
class GridToken:
    facet_letter: str
    level: int
    suffix: Optional[str] = None

    def __str__(self) -> str:
        return f"{self.facet_letter}{self.level}{self.suffix or ''}"


def _tokenize_cell(cell: str) -> GridToken:
    m = _TOKEN_RE.fullmatch(cell)
    if m is None:
        lead = cell[:1]
        if lead.isascii() and lead.isalpha() and lead.upper() not in _FACET_LETTERS:
            raise UnknownFacet(lead)
        raise MalformedGrid(f"cannot parse grid cell {cell!r}")
    letter, digit, suffix = m.groups()
    letter = letter.upper()
    if letter not in _FACET_LETTERS:
        raise UnknownFacet(letter)
    return GridToken(letter, int(digit), suffix.upper() or None)


def tokenize(text: str) -> list[GridToken]:
    """Split a grid into tokens; checks syntax only (no arity, order or ranges)."""
    s = text.strip()
    if len(s) < 2 or s[0] != "|" or s[-1] != "|":
        raise MalformedGrid("grid must start and end with '|'")
    cells = s[1:-1].split("|")
    if any(c == "" for c in cells):
        raise MalformedGrid("grid contains an empty cell")
    return [_tokenize_cell(c) for c in cells]


def parse_grid(text: Union[str, bytes]) -> AnnotationRecord:
    """Parse a grid into an unscoped record (3 tokens: core, 6 tokens: extended)."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError:
            raise MalformedGrid("grid is not valid UTF-8") from None
    for pattern, facets in _FAST:
        m = pattern.fullmatch(text)
        if m is not None:
            return _build(facets, m.groups()[1::3], m.groups()[2::3])
    tokens = tokenize(text)

    if len(tokens) not in (3, 6):
        raise WrongArity(len(tokens))
    seen = set()
    for tok in tokens:
        if tok.facet_letter in seen:
            raise DuplicateFacet(tok.facet_letter)
        seen.add(tok.facet_letter)
    expected = CORE_FACETS if len(tokens) == 3 else EXTENDED_FACETS
    got = [tok.facet_letter for tok in tokens]
    if got != [k.letter for k in expected]:
        raise WrongFacetOrder(
            f"facets must appear in order {','.join(k.letter for k in expected)}, got {','.join(got)}")

    return _build(expected, [str(t.level) for t in tokens], [t.suffix or "" for t in tokens])


def _build(facets, digits, suffixes) -> AnnotationRecord:
    fls = []
    qualifiers = []
    for kind, digit, suffix in zip(facets, digits, suffixes):
        fl = FacetLevel(kind, int(digit))  # raises LevelOutOfRange
        fls.append(fl)
        if suffix:
            qualifiers.append(Qualifier(fl, suffix.upper()))
    return AnnotationRecord(annotation_from_facet_levels(fls), qualifiers=tuple(qualifiers))


def tokens_of(record: AnnotationRecord) -> list[GridToken]:
    return [
        GridToken(fl.facet.letter, fl.level, record.suffix_for(fl.facet))
        for fl in record.facet_levels
    ]


def serialize_grid(record: AnnotationRecord) -> str:
    suffixes = {q.facet_level.facet: q.suffix for q in record.qualifiers}
    return "|" + "|".join(
        f"{fl.facet._value_}{fl.level}{suffixes.get(fl.facet, '')}" for fl in record.facet_levels) + "|"


def parse_scoped_line(text: str) -> tuple[ScopePath, AnnotationRecord]:
    """Parse ``<scope label>: <grid>``; the record carries the parsed scope."""
    label, colon, grid = text.partition(":")
    if not colon:
        raise MissingColon(f"scoped line has no ':' separator: {text.strip()!r}")
    scope = parse_scope(label)
    record = parse_grid(grid)
    return scope, replace(record, scope=scope)


def format_scoped_line(scope: ScopePath, record: AnnotationRecord) -> str:
    return f"{scope}: {serialize_grid(record)}"
