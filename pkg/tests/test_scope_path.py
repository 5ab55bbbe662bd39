import pytest

from aidisclose import InvalidScope, ScopeKind, ScopePath, parse_scope
from aidisclose.scope_path import ScopeSegment

DOC = ScopePath.document()


@pytest.mark.parametrize("text,expected", [
    ("document", DOC),
    ("chapter 3", DOC.child(ScopeKind.CHAPTER, 3)),
    ("section 2", DOC.child(ScopeKind.SECTION, 2)),
    ("section intro", DOC.child(ScopeKind.SECTION, "intro")),
    ("subsection 2.1", DOC.child(ScopeKind.SUBSECTION, "2.1")),
    ("paragraph 12", DOC.child(ScopeKind.PARAGRAPH, 12)),
    ("figure 1", DOC.child(ScopeKind.FIGURE, 1)),
    ("table 4", DOC.child(ScopeKind.TABLE, 4)),
    ("code 2", DOC.child(ScopeKind.CODE, 2)),
    ("references", DOC.child(ScopeKind.REFERENCES)),
    ("Section 2", DOC.child(ScopeKind.SECTION, 2)),
    ("section 2 / paragraph 3", DOC.child(ScopeKind.SECTION, 2).child(ScopeKind.PARAGRAPH, 3)),
    ("document/chapter 1/section 2", DOC.child(ScopeKind.CHAPTER, 1).child(ScopeKind.SECTION, 2)),
])
def test_parse_scope(text, expected):
    assert parse_scope(text) == expected


@pytest.mark.parametrize("text", [
    "", "   ", "chapter one", "paragraph 1a", "references 2", "document 1", "folio 3",
    "paragraph 3 / section 2", "section 1 / section 2", "figure 1 / paragraph 2", "section 2 extra",
    "document / document",
])
def test_parse_scope_rejects(text):
    with pytest.raises(InvalidScope):
        parse_scope(text)


@pytest.mark.parametrize("text", [
    "document", "section 2", "section 2 / paragraph 3", "chapter 1 / section intro / subsection 2.1",
    "references", "section",
])
def test_canonical_string_round_trip(text):
    assert str(parse_scope(text)) == text
    assert parse_scope(str(parse_scope(text))) == parse_scope(text)


def test_unscoped_is_empty():
    assert ScopePath().is_unscoped
    assert str(ScopePath()) == ""


def test_path_must_start_at_document():
    with pytest.raises(InvalidScope):
        ScopePath((ScopeSegment(ScopeKind.SECTION, 1),))


def test_bare_label_is_unbound():
    path = parse_scope("section")
    assert not path.bound
    assert parse_scope("references").bound


def test_bind_bare_label_to_context():
    ctx = parse_scope("chapter 1 / section 2 / subsection 3")
    assert parse_scope("section").bind(ctx) == parse_scope("chapter 1 / section 2")
    assert parse_scope("paragraph 12").bind(ctx) == parse_scope("chapter 1 / section 2 / subsection 3 / paragraph 12")
    assert parse_scope("section 5").bind(ctx) == parse_scope("chapter 1 / section 5")
    assert parse_scope("document").bind(ctx) == DOC


def test_bind_without_context_fails_for_bare_label():
    with pytest.raises(InvalidScope):
        parse_scope("section").bind(DOC)
    assert parse_scope("paragraph 12").bind(DOC) == parse_scope("paragraph 12")


def test_ancestors():
    path = parse_scope("section 2 / paragraph 3")
    assert [str(p) for p in path.ancestors()] == ["document", "section 2", "section 2 / paragraph 3"]
