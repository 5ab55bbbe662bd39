"""Exception types raised across the package."""

from __future__ import annotations


class AidiscloseError(ValueError):
    """Base class for every structured error the library raises."""


class GridError(AidiscloseError):
    """A grid string could not be turned into an annotation."""


class MalformedGrid(GridError):
    pass


class UnknownFacet(GridError):
    def __init__(self, letter: str):
        self.letter = letter
        super().__init__(f"unknown facet letter {letter!r} (expected one of F, G, E, I, C, T)")


class LevelOutOfRange(GridError):
    def __init__(self, facet: str, level: int, maximum: int):
        self.facet = facet
        self.level = level
        self.maximum = maximum
        super().__init__(f"level {facet}{level} out of range: {facet} accepts 0..{maximum}")


class WrongFacetOrder(GridError):
    pass


class WrongArity(GridError):
    def __init__(self, count: int):
        self.count = count
        super().__init__(f"grid has {count} tokens; expected 3 (core) or 6 (extended)")


class DuplicateFacet(GridError):
    def __init__(self, letter: str):
        self.letter = letter
        super().__init__(f"facet {letter} appears more than once")


class MissingColon(GridError):
    pass


class InvalidScope(AidiscloseError):
    pass


class ScopeNotFound(AidiscloseError, LookupError):
    pass


class NoAnnotations(AidiscloseError):
    pass


class CoreNotSupported(AidiscloseError):
    pass


class InvalidDate(AidiscloseError):
    pass


class RegistryError(AidiscloseError):
    pass


class SchemaError(AidiscloseError):
    """A JSON document does not follow the export schema."""
