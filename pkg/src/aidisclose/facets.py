"""The six facets, their level ranges, and validated annotation values."""

from __future__ import annotations

import configparser
import datetime as dt
import enum
import functools
import itertools
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterator, Optional, Union

from .errors import LevelOutOfRange, UnknownFacet
from .scope_path import ScopePath


class FacetKind(enum.Enum):
    FORM = "F"
    GENERATION = "G"
    EVALUATION = "E"
    INTENT = "I"
    CONTROL = "C"
    TRACEABILITY = "T"

    @property
    def letter(self) -> str:
        return self._value_

    @property
    def label(self) -> str:
        return self.name.capitalize()

    @property
    def max_level(self) -> int:
        return 5 if self is FacetKind.GENERATION else 4

    @classmethod
    def from_letter(cls, letter: str) -> "FacetKind":
        try:
            return _BY_LETTER[letter.upper() if letter.isascii() else letter]
        except KeyError:
            raise UnknownFacet(letter) from None


_BY_LETTER = {k.value: k for k in FacetKind}

CORE_FACETS = (FacetKind.FORM, FacetKind.GENERATION, FacetKind.EVALUATION)
EXTENDED_FACETS = CORE_FACETS + (FacetKind.INTENT, FacetKind.CONTROL, FacetKind.TRACEABILITY)


def max_level(facet: FacetKind) -> int:
    return facet.max_level


@dataclass(frozen=True)
class FacetLevel:
    facet: FacetKind
    level: int

    def __post_init__(self):
        if not isinstance(self.facet, FacetKind):
            raise TypeError(f"facet must be a FacetKind, got {self.facet!r}")
        if isinstance(self.level, bool) or not isinstance(self.level, int):
            raise TypeError(f"level must be an int, got {self.level!r}")
        if not 0 <= self.level <= self.facet.max_level:
            raise LevelOutOfRange(self.facet.letter, self.level, self.facet.max_level)

    @classmethod
    def unchecked(cls, facet: FacetKind, level: int) -> "FacetLevel":
        """Build a FacetLevel without the range check.

        Only meant for representing externally supplied data that is about to
        be linted with :func:`validate_record`.
        """
        obj = object.__new__(cls)
        object.__setattr__(obj, "facet", facet)
        object.__setattr__(obj, "level", level)
        return obj

    @property
    def code(self) -> str:
        return f"{self.facet.letter}{self.level}"

    @property
    def in_range(self) -> bool:
        return 0 <= self.level <= self.facet.max_level

    def __str__(self) -> str:
        return self.code


@dataclass(frozen=True)
class Qualifier:
    facet_level: FacetLevel
    suffix: str

    @property
    def code(self) -> str:
        return f"{self.facet_level.code}{self.suffix}"

    @property
    def well_formed(self) -> bool:
        return len(self.suffix) == 1 and "A" <= self.suffix <= "Z"


@dataclass(frozen=True)
class CoreAnnotation:
    form: FacetLevel
    generation: FacetLevel
    evaluation: FacetLevel

    @property
    def facet_levels(self) -> tuple[FacetLevel, ...]:
        return (self.form, self.generation, self.evaluation)

    @property
    def slots(self) -> tuple[FacetKind, ...]:
        return CORE_FACETS


@dataclass(frozen=True)
class ExtendedAnnotation:
    core: CoreAnnotation
    intent: FacetLevel
    control: FacetLevel
    traceability: FacetLevel

    @property
    def facet_levels(self) -> tuple[FacetLevel, ...]:
        return self.core.facet_levels + (self.intent, self.control, self.traceability)

    @property
    def slots(self) -> tuple[FacetKind, ...]:
        return EXTENDED_FACETS


Levels = Union[CoreAnnotation, ExtendedAnnotation]


def annotation(*levels: int) -> Levels:
    """Build a core (3 ints) or extended (6 ints) annotation in F,G,E,I,C,T order."""
    if len(levels) == 3:
        f, g, e = (FacetLevel(k, v) for k, v in zip(CORE_FACETS, levels))
        return CoreAnnotation(f, g, e)
    if len(levels) == 6:
        f, g, e, i, c, t = (FacetLevel(k, v) for k, v in zip(EXTENDED_FACETS, levels))
        return ExtendedAnnotation(CoreAnnotation(f, g, e), i, c, t)
    raise ValueError(f"expected 3 or 6 levels, got {len(levels)}")


def annotation_from_facet_levels(fls: "tuple[FacetLevel, ...] | list[FacetLevel]") -> Levels:
    if len(fls) == 3:
        return CoreAnnotation(*fls)
    if len(fls) == 6:
        return ExtendedAnnotation(CoreAnnotation(*fls[:3]), *fls[3:])
    raise ValueError(f"expected 3 or 6 facet levels, got {len(fls)}")


@dataclass(frozen=True)
class ToolRef:
    author_or_vendor: str
    title: str
    year: int
    url: str
    accessed: Union[dt.date, str]
    cite_key: str


@dataclass(frozen=True)
class EvidenceRef:
    description: str
    location: Optional[str] = None


@dataclass(frozen=True)
class AnnotationRecord:
    levels: Levels
    scope: ScopePath = field(default_factory=ScopePath)
    qualifiers: tuple[Qualifier, ...] = ()
    tools: tuple[ToolRef, ...] = ()
    evidence: tuple[EvidenceRef, ...] = ()

    @classmethod
    def of(cls, *levels: int, **kwargs) -> "AnnotationRecord":
        for name in ("qualifiers", "tools", "evidence"):
            if name in kwargs:
                kwargs[name] = tuple(kwargs[name])
        return cls(annotation(*levels), **kwargs)

    @property
    def is_extended(self) -> bool:
        return isinstance(self.levels, ExtendedAnnotation)

    @property
    def facet_levels(self) -> tuple[FacetLevel, ...]:
        return self.levels.facet_levels

    @property
    def facets(self) -> tuple[FacetKind, ...]:
        return self.levels.slots

    def level_of(self, facet: FacetKind) -> Optional[int]:
        for fl in self.facet_levels:
            if fl.facet is facet:
                return fl.level
        return None

    def suffix_for(self, facet: FacetKind) -> Optional[str]:
        for q in self.qualifiers:
            if q.facet_level.facet is facet:
                return q.suffix
        return None

    def code_of(self, facet: FacetKind) -> Optional[str]:
        """Level code for one facet including any qualifier suffix, e.g. ``I4Z``."""
        level = self.level_of(facet)
        if level is None:
            return None
        return f"{facet.letter}{level}{self.suffix_for(facet) or ''}"

    @property
    def codes(self) -> tuple[str, ...]:
        return tuple(self.code_of(k) for k in self.facets)

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(fl.level for fl in self.facet_levels)


def all_core_annotations() -> Iterator[CoreAnnotation]:
    for levels in itertools.product(*(range(k.max_level + 1) for k in CORE_FACETS)):
        yield annotation(*levels)


def all_extended_annotations() -> Iterator[ExtendedAnnotation]:
    for levels in itertools.product(*(range(k.max_level + 1) for k in EXTENDED_FACETS)):
        yield annotation(*levels)


# -- level definitions --------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _default_definitions() -> dict[str, str]:
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    parser.read_string(resources.files(__package__).joinpath("data/default.ini").read_text("utf-8"))
    return dict(parser["definitions"])


def level_definition(fl: FacetLevel, registry=None) -> str:
    """Canonical short definition of a facet-level pair, e.g. E1 -> "automated review only"."""
    if registry is not None:
        override = registry.definitions.get(fl.code)
        if override:
            return override
    return _default_definitions()[fl.code]


# -- validation ---------------------------------------------------------------

@dataclass(frozen=True)
class Finding:
    code: str
    message: str
    line: Optional[int] = None

    def __str__(self) -> str:
        where = f"line {self.line}: " if self.line is not None else ""
        return f"{where}{self.code}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple[Finding, ...] = ()
    warnings: tuple[Finding, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors


def validate_record(record: AnnotationRecord, registry=None) -> ValidationReport:
    errors: list[Finding] = []
    warnings: list[Finding] = []

    seen: set[FacetKind] = set()
    for slot, fl in zip(record.levels.slots, record.facet_levels):
        if fl.facet in seen:
            errors.append(Finding("duplicate-facet", f"facet {fl.facet.letter} appears more than once"))
        seen.add(fl.facet)
        if fl.facet is not slot:
            errors.append(Finding(
                "facet-mismatch", f"{slot.label} slot holds a {fl.facet.label} level ({fl.code})"))
        if not fl.in_range:
            errors.append(Finding(
                "level-out-of-range",
                f"level {fl.code} out of range: {fl.facet.letter} accepts 0..{fl.facet.max_level}"))

    qualified: set[FacetKind] = set()
    for q in record.qualifiers:
        facet = q.facet_level.facet
        if not q.well_formed:
            errors.append(Finding("bad-qualifier", f"qualifier suffix {q.suffix!r} is not one letter A-Z"))
        if record.level_of(facet) != q.facet_level.level:
            errors.append(Finding(
                "qualifier-mismatch",
                f"qualifier {q.code} does not match the record's {facet.label} level"))
        elif facet in qualified:
            errors.append(Finding("duplicate-qualifier", f"facet {facet.letter} carries two qualifiers"))
        qualified.add(facet)
        if q.well_formed and (registry is None or not registry.has_qualifier(q)):
            warnings.append(Finding(
                "unregistered-qualifier",
                f"qualifier {q.code} is not defined in a loaded extension registry"))

    for tool in record.tools:
        key = tool.cite_key or ""
        if not key.strip():
            errors.append(Finding("empty-cite-key", f"tool {tool.title!r} has an empty cite key"))
        elif any(ch.isspace() for ch in key):
            errors.append(Finding("bad-cite-key", f"cite key {key!r} contains whitespace"))

    for ev in record.evidence:
        if not ev.description.strip():
            errors.append(Finding("empty-evidence", "evidence entry has an empty description"))

    return ValidationReport(tuple(errors), tuple(warnings))
