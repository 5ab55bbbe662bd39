"""Extension registry files (experimental).

A registry is an INI file read with :mod:`configparser`. Every section is
optional::

    [qualifiers]
    # <level code><suffix> = description
    I4Z = institution-specific variant of conceptual support

    [definitions]
    # overrides for the short level definitions
    E1 = automated checks only

    [fragments.explanatory]
    # per-profile fragment overrides; also fragments.publisher / .compliance
    F4 = The text was globally reorganised.
    unspecified = ...

    [responsibility]
    statement = The authors remain responsible for the text.

    [tool:openai2026]
    author = OpenAI
    title = GPT Models
    year = 2026
    url = https://developers.openai.com
    accessed = 2026-04-25

Keys are case-sensitive. The bundled defaults (``data/default.ini``) use the
same layout.
"""

from __future__ import annotations

import configparser
import os
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .errors import RegistryError
from .facets import FacetKind, Qualifier, ToolRef

PROFILES = ("explanatory", "publisher", "compliance")
ENV_VAR = "AIDISCLOSE_REGISTRY"

_LEVEL_CODE_RE = re.compile(r"([FGEICT])([0-9])", re.ASCII)
_QUALIFIER_RE = re.compile(r"([FGEICT])([0-9])([A-Z])", re.ASCII)


def _check_level_code(code: str, where: str) -> None:
    m = _LEVEL_CODE_RE.fullmatch(code)
    if not m or int(m.group(2)) > FacetKind(m.group(1)).max_level:
        raise RegistryError(f"[{where}]: {code!r} is not a valid level code")


@dataclass(frozen=True)
class ExtensionRegistry:
    qualifiers: dict[str, str] = field(default_factory=dict)
    definitions: dict[str, str] = field(default_factory=dict)
    fragments: dict[str, dict[str, str]] = field(default_factory=dict)
    responsibility_statement: Optional[str] = None
    tools: tuple[ToolRef, ...] = ()
    source: Optional[str] = None

    def has_qualifier(self, q: Qualifier) -> bool:
        return q.code in self.qualifiers

    def qualifier_description(self, q: Qualifier) -> Optional[str]:
        return self.qualifiers.get(q.code)


def parse_registry(text: str, source: Optional[str] = None) -> ExtensionRegistry:
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    try:
        parser.read_string(text, source=source or "<registry>")
    except configparser.Error as exc:
        raise RegistryError(str(exc)) from exc

    qualifiers: dict[str, str] = {}
    definitions: dict[str, str] = {}
    fragments: dict[str, dict[str, str]] = {}
    statement = None
    tools = []

    for name in parser.sections():
        sec = parser[name]
        if name == "qualifiers":
            for code, desc in sec.items():
                m = _QUALIFIER_RE.fullmatch(code)
                if not m or int(m.group(2)) > FacetKind(m.group(1)).max_level:
                    raise RegistryError(f"[qualifiers]: {code!r} is not a valid qualified level code")
                qualifiers[code] = desc
        elif name == "definitions":
            for code, text_ in sec.items():
                _check_level_code(code, name)
                definitions[code] = text_
        elif name.startswith("fragments."):
            profile = name.split(".", 1)[1]
            if profile not in PROFILES:
                raise RegistryError(f"[{name}]: unknown profile {profile!r}")
            for code, text_ in sec.items():
                if code != "unspecified":
                    _check_level_code(code, name)
                if not text_.strip():
                    raise RegistryError(f"[{name}]: empty fragment for {code}")
            fragments[profile] = dict(sec.items())
        elif name == "responsibility":
            statement = sec.get("statement", "").strip()
            if not statement:
                raise RegistryError("[responsibility]: statement must be non-empty")
        elif name.startswith("tool:"):
            tools.append(_tool_from_section(name[len("tool:"):].strip(), sec))
        else:
            raise RegistryError(f"unknown registry section [{name}]")

    return ExtensionRegistry(qualifiers, definitions, fragments, statement, tuple(tools), source)


def _tool_from_section(key: str, sec) -> ToolRef:
    missing = [f for f in ("author", "title", "year") if f not in sec]
    if missing:
        raise RegistryError(f"[tool:{key}]: missing {', '.join(missing)}")
    try:
        year = int(sec["year"])
    except ValueError:
        raise RegistryError(f"[tool:{key}]: year must be an integer") from None
    return ToolRef(
        author_or_vendor=sec["author"],
        title=sec["title"],
        year=year,
        url=sec.get("url", ""),
        accessed=sec.get("accessed", ""),
        cite_key=key,
    )


def load_registry(path: Union[str, os.PathLike]) -> ExtensionRegistry:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise RegistryError(f"cannot read registry {path}: {exc}") from exc
    return parse_registry(text, source=str(path))


def default_data() -> ExtensionRegistry:
    """The bundled definitions and fragments, parsed as a registry."""
    text = resources.files(__package__).joinpath("data/default.ini").read_text("utf-8")
    return parse_registry(text, source="default.ini")


def registry_path_from_env() -> Optional[str]:
    return os.environ.get(ENV_VAR) or None
