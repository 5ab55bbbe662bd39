import re

import pytest
from hypothesis import given

from aidisclose import (
    AnnotationRecord,
    DisclosureProfile,
    FacetKind,
    TemplateRegistry,
    fragment_for,
    generate_disclosure,
    parse_grid,
    parse_registry,
)

from conftest import records

F, G, E, I, C, T = FacetKind
EXPL, PUB, COMP = DisclosureProfile
STATEMENT = ("The human author remains responsible for the accuracy, integrity, originality, "
             "and final form of the text.")

# Template table rows, copied from the source document.
TABLE = {
    (F, 4): "The text underwent global rhetorical or structural restructuring.",
    (G, 4): "The text was produced through iterative human-AI conversation.",
    (E, 2): "The text received partial human review.",
    (I, 4): "AI was used for conceptual support, ideation, framing, or argument development.",
    (C, 2): "The process was guided by human-AI interaction with substantial human direction.",
    (T, 2): "Prompts or interaction excerpts are available.",
}


@pytest.mark.parametrize("key", list(TABLE))
def test_table_fragments_verbatim(key):
    assert fragment_for(*key, EXPL) == TABLE[key]


def test_explanatory_block_for_table_row():
    text = generate_disclosure(AnnotationRecord.of(4, 4, 2, 4, 2, 2), EXPL)
    assert text.split("\n") == list(TABLE.values()) + [STATEMENT]


def test_explanatory_zero_core():
    lines = generate_disclosure(AnnotationRecord.of(0, 0, 0), EXPL).split("\n")
    assert len(lines) == 5
    assert "form" in lines[0].lower()
    assert "human" in lines[1].lower()
    assert "no revision" in lines[2]
    assert "unspecified" in lines[3]
    assert lines[-1] == STATEMENT


def test_compliance_table_row_codes():
    text = generate_disclosure(AnnotationRecord.of(4, 4, 2, 4, 2, 2), COMP)
    for code in ("G4", "I4", "F4", "E2", "C2", "T2"):
        assert code in text
    assert "AI assistance was used at level G4" in text
    assert "Human control is classified as C2" in text
    assert text.endswith(STATEMENT)


def test_compliance_core_has_no_extended_codes():
    text = generate_disclosure(AnnotationRecord.of(1, 0, 3), COMP)
    assert all(c in text for c in ("F1", "G0", "E3"))
    assert not re.search(r"\b[ICT][0-9]\b", text)


def test_compliance_mentions_qualifier():
    rec = parse_grid("|F4|G4|E2|I4Z|C2|T2|")
    text = generate_disclosure(rec, COMP)
    assert "I4Z" in text and "not defined" in text
    reg = TemplateRegistry.from_extension(parse_registry("[qualifiers]\nI4Z = institution-specific conceptual support\n"))
    assert "institution-specific conceptual support" in generate_disclosure(rec, COMP, reg)


def test_publisher_is_one_paragraph():
    text = generate_disclosure(AnnotationRecord.of(4, 4, 2, 4, 2, 2), PUB)
    assert "\n" not in text
    assert text.startswith("In preparing this text,")
    assert text.endswith(STATEMENT)
    core = generate_disclosure(AnnotationRecord.of(0, 0, 0), PUB)
    assert "not specified" in core and core.endswith(STATEMENT)


@pytest.mark.parametrize("profile", list(DisclosureProfile))
def test_fragments_distinct_per_level(profile):
    for facet in FacetKind:
        texts = [fragment_for(facet, n, profile) for n in range(facet.max_level + 1)]
        assert len(set(texts)) == len(texts)
        assert all(t.strip() for t in texts)


@pytest.mark.parametrize("profile", list(DisclosureProfile))
@given(records())
def test_statement_last_and_deterministic(profile, rec):
    text = generate_disclosure(rec, profile)
    assert text.endswith(STATEMENT)
    assert text.count(STATEMENT) == 1
    assert text == generate_disclosure(rec, profile)


def test_registry_overrides_fragment_and_statement():
    ext = parse_registry(
        "[fragments.explanatory]\nF4 = The structure was rebuilt.\n"
        "[responsibility]\nstatement = The authors answer for every word.\n")
    reg = TemplateRegistry.from_extension(ext)
    text = generate_disclosure(AnnotationRecord.of(4, 4, 2, 4, 2, 2), EXPL, reg)
    lines = text.split("\n")
    assert lines[0] == "The structure was rebuilt."
    assert lines[1] == TABLE[(G, 4)]
    assert lines[-1] == "The authors answer for every word."


def test_default_registry_unchanged_by_override():
    TemplateRegistry.from_extension(parse_registry("[fragments.explanatory]\nF4 = X.\n"))
    assert fragment_for(F, 4, EXPL) == TABLE[(F, 4)]
