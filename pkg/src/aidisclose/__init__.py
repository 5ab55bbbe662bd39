"""Faceted AI-use disclosure annotations: parse, validate, aggregate, render, disclose."""

__version__ = "0.1.0"

from .citation import make_bibliography, make_bibtex
from .disclosure import DisclosureProfile, TemplateRegistry, fragment_for, generate_disclosure
from .document import (
    AggregationPolicy,
    DocumentTree,
    DuplicateAnnotationWarning,
    ScanFormat,
    aggregate,
    attach,
    build_tree,
    resolve_effective,
    scan_document,
)
from .errors import (
    AidiscloseError,
    CoreNotSupported,
    DuplicateFacet,
    GridError,
    InvalidDate,
    InvalidScope,
    LevelOutOfRange,
    MalformedGrid,
    MissingColon,
    NoAnnotations,
    RegistryError,
    SchemaError,
    ScopeNotFound,
    UnknownFacet,
    WrongArity,
    WrongFacetOrder,
)
from .facets import (
    AnnotationRecord,
    CoreAnnotation,
    EvidenceRef,
    ExtendedAnnotation,
    FacetKind,
    FacetLevel,
    Qualifier,
    ToolRef,
    ValidationReport,
    annotation,
    level_definition,
    max_level,
    validate_record,
)
from .grid import parse_grid, parse_scoped_line, serialize_grid
from .registry import ExtensionRegistry, load_registry, parse_registry
from .render import (
    BadgeStyle,
    export_gridfile,
    export_json,
    import_json,
    render_badge,
    render_html,
    render_latex,
    render_markdown_comment,
)
from .scope_path import ScopeKind, ScopePath, parse_scope

__all__ = [
    "aggregate",
    "AggregationPolicy",
    "AidiscloseError",
    "annotation",
    "AnnotationRecord",
    "attach",
    "BadgeStyle",
    "build_tree",
    "CoreAnnotation",
    "CoreNotSupported",
    "DisclosureProfile",
    "DocumentTree",
    "DuplicateAnnotationWarning",
    "DuplicateFacet",
    "EvidenceRef",
    "export_gridfile",
    "export_json",
    "ExtendedAnnotation",
    "ExtensionRegistry",
    "FacetKind",
    "FacetLevel",
    "fragment_for",
    "generate_disclosure",
    "GridError",
    "import_json",
    "InvalidDate",
    "InvalidScope",
    "level_definition",
    "LevelOutOfRange",
    "load_registry",
    "make_bibliography",
    "make_bibtex",
    "MalformedGrid",
    "max_level",
    "MissingColon",
    "NoAnnotations",
    "parse_grid",
    "parse_registry",
    "parse_scope",
    "parse_scoped_line",
    "Qualifier",
    "RegistryError",
    "render_badge",
    "render_html",
    "render_latex",
    "render_markdown_comment",
    "resolve_effective",
    "scan_document",
    "ScanFormat",
    "SchemaError",
    "ScopeKind",
    "ScopeNotFound",
    "ScopePath",
    "serialize_grid",
    "TemplateRegistry",
    "ToolRef",
    "UnknownFacet",
    "validate_record",
    "ValidationReport",
    "WrongArity",
    "WrongFacetOrder",
]
