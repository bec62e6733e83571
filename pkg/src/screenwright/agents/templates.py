"""Prompt templates: external text files with named {placeholder} fields.

Substitution replaces only known placeholders, so literal braces elsewhere in
a template (JSON examples in particular) need no escaping.
"""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path
from typing import Mapping, Optional

from ..errors import TemplateError

_PLACEHOLDER = re.compile(r"\{([a-z_][a-z0-9_]*)\}")

KNOWN_FIELDS = frozenset(
    {
        "description",
        "kind",
        "guidance",
        "library_index",
        "feedback",
        "retrieved_context",
        "checklist",
        "coordinates",
        "review",
        "validation_report",
    }
)


class TemplateSet:
    """Loads templates by name from an optional override directory, then package data."""

    def __init__(self, override_dir: Optional[Path] = None):
        self.override_dir = Path(override_dir) if override_dir else None

    def load(self, name: str) -> str:
        if self.override_dir is not None:
            candidate = self.override_dir / f"{name}.txt"
            if candidate.exists():
                return candidate.read_text(encoding="utf-8")
        ref = resources.files("screenwright.agents.templates").joinpath(f"{name}.txt")
        try:
            return ref.read_text("utf-8")
        except FileNotFoundError:
            raise TemplateError(f"no prompt template named '{name}'") from None

    def render(self, name: str, fields: Mapping[str, str]) -> str:
        return render_template(self.load(name), fields)


def render_template(template: str, fields: Mapping[str, str]) -> str:
    def substitute(match: re.Match) -> str:
        key = match.group(1)
        if key not in KNOWN_FIELDS:
            return match.group(0)  # literal braces that merely look like a placeholder
        if key not in fields:
            raise TemplateError(f"template references '{{{key}}}' but no value was provided")
        return str(fields[key])

    return _PLACEHOLDER.sub(substitute, template)
