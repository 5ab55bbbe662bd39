import pytest

from aidisclose import FacetKind, FacetLevel, Qualifier, load_registry, parse_registry
from aidisclose.errors import RegistryError
from aidisclose.registry import ENV_VAR, default_data, registry_path_from_env

SAMPLE = """\
[qualifiers]
I4Z = institution-specific conceptual support

[definitions]
E1 = automated checks only

[fragments.publisher]
F4 = the text was rebuilt

[responsibility]
statement = The authors answer for the text.

[tool:openai2026]
author = OpenAI
title = GPT Models
year = 2026
url = https://developers.openai.com
accessed = 2026-04-25
"""


def test_parse_sample():
    reg = parse_registry(SAMPLE)
    q = Qualifier(FacetLevel(FacetKind.INTENT, 4), "Z")
    assert reg.has_qualifier(q)
    assert reg.qualifier_description(q) == "institution-specific conceptual support"
    assert reg.definitions == {"E1": "automated checks only"}
    assert reg.fragments == {"publisher": {"F4": "the text was rebuilt"}}
    assert reg.responsibility_statement == "The authors answer for the text."
    [tool] = reg.tools
    assert (tool.cite_key, tool.year, tool.accessed) == ("openai2026", 2026, "2026-04-25")


def test_percent_signs_are_literal():
    reg = parse_registry("[definitions]\nE1 = 100% automated\n")
    assert reg.definitions["E1"] == "100% automated"


@pytest.mark.parametrize("text", [
    "[qualifiers]\nI5Z = x\n",
    "[qualifiers]\nI4 = x\n",
    "[qualifiers]\nI4ZZ = x\n",
    "[definitions]\nF5 = x\n",
    "[fragments.lawyer]\nF1 = x\n",
    "[fragments.explanatory]\nF1 =\n",
    "[responsibility]\nstatement =\n",
    "[tool:k]\nauthor = A\n",
    "[tool:k]\nauthor = A\ntitle = B\nyear = soon\n",
    "[colors]\nF1 = red\n",
    "no section header\n",
])
def test_rejects(text):
    with pytest.raises(RegistryError):
        parse_registry(text)


def test_load_registry(tmp_path):
    path = tmp_path / "reg.ini"
    path.write_text(SAMPLE, encoding="utf-8")
    assert load_registry(path).source == str(path)
    with pytest.raises(RegistryError):
        load_registry(tmp_path / "missing.ini")


def test_env_var(monkeypatch):
    monkeypatch.delenv(ENV_VAR, raising=False)
    assert registry_path_from_env() is None
    monkeypatch.setenv(ENV_VAR, "/tmp/x.ini")
    assert registry_path_from_env() == "/tmp/x.ini"


def test_default_data_complete():
    data = default_data()
    assert len(data.definitions) == 31
    for profile in ("explanatory", "publisher", "compliance"):
        assert len(data.fragments[profile]) == 32
    assert data.responsibility_statement.startswith("The human author remains responsible")
