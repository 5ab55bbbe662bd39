"""Template-based prose disclosures in three audience profiles."""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Optional

from .facets import EXTENDED_FACETS, AnnotationRecord, FacetKind
from .registry import ExtensionRegistry, default_data

F, G, E, I, C, T = EXTENDED_FACETS


class DisclosureProfile(enum.Enum):
    EXPLANATORY = "explanatory"
    PUBLISHER = "publisher"
    COMPLIANCE = "compliance"


@dataclass(frozen=True)
class TemplateRegistry:
    fragments: dict  # (FacetKind, level, DisclosureProfile) -> str
    unspecified: dict  # DisclosureProfile -> str
    responsibility_statement: str
    extension: Optional[ExtensionRegistry] = None

    @classmethod
    def default(cls) -> "TemplateRegistry":
        return _default_registry()

    @classmethod
    def from_extension(cls, ext: Optional[ExtensionRegistry]) -> "TemplateRegistry":
        base = _default_registry()
        if ext is None:
            return base
        fragments = dict(base.fragments)
        unspecified = dict(base.unspecified)
        for pname, table in ext.fragments.items():
            profile = DisclosureProfile(pname)
            for code, text in table.items():
                if code == "unspecified":
                    unspecified[profile] = text
                else:
                    fragments[(FacetKind(code[0]), int(code[1]), profile)] = text
        return cls(fragments, unspecified,
                   ext.responsibility_statement or base.responsibility_statement, ext)

    def fragment(self, facet: FacetKind, level: int, profile: DisclosureProfile) -> str:
        return self.fragments[(facet, level, profile)]


@functools.lru_cache(maxsize=None)
def _default_registry() -> TemplateRegistry:
    data = default_data()
    fragments = {}
    unspecified = {}
    for profile in DisclosureProfile:
        table = data.fragments[profile.value]
        unspecified[profile] = table["unspecified"]
        for facet in EXTENDED_FACETS:
            for level in range(facet.max_level + 1):
                fragments[(facet, level, profile)] = table[f"{facet.letter}{level}"]
    return TemplateRegistry(fragments, unspecified, data.responsibility_statement)


def fragment_for(facet: FacetKind, level: int, profile: DisclosureProfile,
                 registry: Optional[TemplateRegistry] = None) -> str:
    registry = registry or TemplateRegistry.default()
    return registry.fragment(facet, level, profile)


def _explanatory(record: AnnotationRecord, reg: TemplateRegistry) -> list[str]:
    p = DisclosureProfile.EXPLANATORY
    sentences = [reg.fragment(fl.facet, fl.level, p) for fl in record.facet_levels]
    if not record.is_extended:
        sentences.append(reg.unspecified[p])
    return sentences


def _publisher(record: AnnotationRecord, reg: TemplateRegistry) -> list[str]:
    p = DisclosureProfile.PUBLISHER

    def clause(facet):
        return reg.fragment(facet, record.level_of(facet), p)

    sentences = [_capitalize(f"In preparing this text, {clause(G)}, and {clause(F)}.")]
    if record.is_extended:
        sentences.append(f"AI was used for {clause(I)}, {clause(C)}.")
    sentences.append(f"The author {clause(E)}.")
    if record.is_extended:
        sentences.append(clause(T))
    else:
        sentences.append(reg.unspecified[p])
    return sentences


def _compliance(record: AnnotationRecord, reg: TemplateRegistry) -> list[str]:
    p = DisclosureProfile.COMPLIANCE
    sentences = [reg.fragment(fl.facet, fl.level, p) for fl in record.facet_levels]
    for q in record.qualifiers:
        note = f"Level {q.facet_level.code} carries the local qualifier {q.code}"
        desc = reg.extension.qualifier_description(q) if reg.extension else None
        sentences.append(f"{note} ({desc})." if desc else f"{note}, not defined in a loaded registry.")
    if not record.is_extended:
        sentences.append(reg.unspecified[p])
    return sentences


def _capitalize(s: str) -> str:
    return s[:1].upper() + s[1:]


_BUILDERS = {
    DisclosureProfile.EXPLANATORY: _explanatory,
    DisclosureProfile.PUBLISHER: _publisher,
    DisclosureProfile.COMPLIANCE: _compliance,
}


def generate_disclosure(record: AnnotationRecord,
                        profile: DisclosureProfile = DisclosureProfile.EXPLANATORY,
                        registry: Optional[TemplateRegistry] = None) -> str:
    """Expand a record into prose; the responsibility statement always closes the text.

    Explanatory output puts one sentence per line; the publisher profile is a
    single paragraph; compliance lists one coded sentence per line.
    """
    registry = registry or TemplateRegistry.default()
    sentences = _BUILDERS[profile](record, registry)
    sentences.append(registry.responsibility_statement)
    sep = " " if profile is DisclosureProfile.PUBLISHER else "\n"
    return sep.join(sentences)
