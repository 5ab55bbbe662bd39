import datetime as dt
import random

import pytest
from hypothesis import strategies as st

from aidisclose import AnnotationRecord, Qualifier, ToolRef, annotation
from aidisclose.facets import CORE_FACETS, EXTENDED_FACETS, EvidenceRef
from aidisclose.scope_path import ScopeKind, ScopePath

ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE_KEY] = []


@pytest.fixture
def verdict(request):
    """Record one acceptance-criterion outcome for the end-of-run summary."""
    log = request.config.stash[ACCEPTANCE_KEY]

    def record(criterion, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f" ({detail})" if detail else "")
        log.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


# -- strategies ---------------------------------------------------------------

def levels_strategy(facets):
    return st.tuples(*(st.integers(0, k.max_level) for k in facets))


tools = st.builds(
    ToolRef,
    author_or_vendor=st.sampled_from(["OpenAI", "Anthropic", "Acme Labs"]),
    title=st.sampled_from(["GPT Models", "Claude", "Writer 2"]),
    year=st.integers(2020, 2030),
    url=st.sampled_from(["", "https://example.org/x"]),
    accessed=st.dates(dt.date(2020, 1, 1), dt.date(2030, 12, 31)),
    cite_key=st.from_regex(r"[a-z][a-z0-9]{2,10}", fullmatch=True),
)
evidence = st.builds(
    EvidenceRef,
    description=st.sampled_from(["prompt log", "draft history", "review notes"]),
    location=st.one_of(st.none(), st.just("logs/chat.txt")),
)


@st.composite
def records(draw, scope=ScopePath()):
    facets = draw(st.sampled_from([CORE_FACETS, EXTENDED_FACETS]))
    levels = draw(levels_strategy(facets))
    rec = AnnotationRecord(annotation(*levels), scope=scope)
    quals = []
    for fl in rec.facet_levels:
        if draw(st.integers(0, 5)) == 0:
            quals.append(Qualifier(fl, draw(st.sampled_from("ABCXYZ"))))
    return AnnotationRecord(
        rec.levels, scope=scope, qualifiers=tuple(quals),
        tools=tuple(draw(st.lists(tools, max_size=2, unique_by=lambda t: t.cite_key))),
        evidence=tuple(draw(st.lists(evidence, max_size=2))),
    )


scope_paths = st.sampled_from([
    ScopePath.document(),
    ScopePath.document().child(ScopeKind.SECTION, 1),
    ScopePath.document().child(ScopeKind.PARAGRAPH, 12),
    ScopePath.document().child(ScopeKind.SECTION, 2).child(ScopeKind.PARAGRAPH, 3),
    ScopePath.document().child(ScopeKind.CHAPTER, 1).child(ScopeKind.SECTION, "intro"),
    ScopePath.document().child(ScopeKind.REFERENCES),
])


# -- random document trees (plain-data form, independent of DocumentTree) -----

_STRUCTURAL = {0: [ScopeKind.CHAPTER, ScopeKind.SECTION], 1: [ScopeKind.SECTION], 2: [ScopeKind.SUBSECTION]}
_LEAVES = [ScopeKind.PARAGRAPH, ScopeKind.FIGURE, ScopeKind.TABLE, ScopeKind.CODE]


def random_levels(rng):
    facets = CORE_FACETS if rng.random() < 0.4 else EXTENDED_FACETS
    return tuple(rng.randint(0, k.max_level) for k in facets)


def random_plain_tree(rng, max_nodes=200, max_depth=5, p_annotated=0.3):
    """A tree as nested dicts: {"seg": (kind, ident), "levels": tuple|None, "children": [...]}.

    Depth counts the document node, so depth 5 reaches document/chapter/section/subsection/leaf.
    """
    root = {"seg": (ScopeKind.DOCUMENT, None), "levels": None, "children": []}
    count = 1
    target = rng.randint(1, max_nodes)
    frontier = [(root, 1)]
    while frontier and count < target:
        node, depth = rng.choice(frontier)
        rank = node["seg"][0].rank
        if depth < max_depth - 1 and rank in _STRUCTURAL and rng.random() < 0.5:
            kind = rng.choice(_STRUCTURAL[rank])
        else:
            kind = rng.choice(_LEAVES)
        child = {"seg": (kind, len(node["children"]) + 1), "levels": None, "children": []}
        node["children"].append(child)
        count += 1
        if kind.rank < 4:
            frontier.append((child, depth + 1))
    for node, _ in plain_nodes(root):
        if rng.random() < p_annotated:
            node["levels"] = random_levels(rng)
    return root


def plain_nodes(root):
    """Every node with its root-to-node chain of plain nodes."""
    out = []
    stack = [(root, [root])]
    while stack:
        node, chain = stack.pop()
        out.append((node, chain))
        for c in node["children"]:
            stack.append((c, chain + [c]))
    return out


def chain_to_path(chain):
    path = ScopePath.document()
    for n in chain[1:]:
        path = path.child(*n["seg"])
    return path


@pytest.fixture
def rng():
    return random.Random(20261016)
