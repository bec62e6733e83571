"""Versioned store of engine-script functions.

A library is an immutable snapshot: every mutation returns a new snapshot with
a bumped version, so any historical state stays reachable for replay. Session
libraries fork from a base copy-on-write; the base is never touched.
"""

from __future__ import annotations

import ast
import hashlib
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterator, Mapping, Optional, Sequence

from ..errors import BodyParseError, NameConflict, UnknownFunction

PRELUDE_HEADER = "# engine function library prelude"


class Provenance(str, Enum):
    SEED = "seed"
    AGENT_COMPOSED = "agent_composed"
    AGENT_UPDATED = "agent_updated"


class UpdateAction(str, Enum):
    ADD = "add"
    REPLACE = "replace"
    REMOVE = "remove"


@dataclass(frozen=True)
class Param:
    """One declared parameter: name, a loose semantic type, optional units and default."""

    name: str
    semantic_type: str = "any"
    units: Optional[str] = None
    default: Optional[str] = None  # source text of the default, if any

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "semantic_type": self.semantic_type,
            "units": self.units,
            "default": self.default,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Param":
        return cls(
            name=data["name"],
            semantic_type=data.get("semantic_type", "any"),
            units=data.get("units"),
            default=data.get("default"),
        )


def parse_function_body(body: str) -> ast.FunctionDef:
    """Parse body text; it must be exactly one top-level function definition."""
    try:
        tree = ast.parse(body)
    except SyntaxError as exc:
        raise BodyParseError(f"function body does not parse: {exc}") from exc
    defs = [node for node in tree.body if isinstance(node, ast.FunctionDef)]
    if len(tree.body) != 1 or len(defs) != 1:
        raise BodyParseError("function body must be a single top-level def")
    return defs[0]


def params_from_body(body: str) -> tuple[Param, ...]:
    """Derive the parameter list from the body's signature (positional args only)."""
    node = parse_function_body(body)
    args = node.args.args
    defaults = node.args.defaults
    pad = [None] * (len(args) - len(defaults))
    out = []
    for arg, default in zip(args, pad + list(defaults)):
        default_src = ast.unparse(default) if default is not None else None
        out.append(Param(name=arg.arg, default=default_src))
    return tuple(out)


@dataclass(frozen=True)
class LibraryFunction:
    name: str
    params: tuple[Param, ...]
    body: str
    docstring: str = ""
    version: int = 1
    provenance: Provenance = Provenance.SEED

    def __post_init__(self):
        node = parse_function_body(self.body)
        if node.name != self.name:
            raise BodyParseError(
                f"body defines '{node.name}' but function is registered as '{self.name}'"
            )
        if self.version < 1:
            raise ValueError("function version must be positive")
        object.__setattr__(self, "body", self.body.strip("\n"))

    @classmethod
    def from_body(
        cls,
        body: str,
        docstring: str = "",
        provenance: Provenance = Provenance.AGENT_COMPOSED,
        version: int = 1,
    ) -> "LibraryFunction":
        """Build a function record from source alone; name and params come from the def."""
        node = parse_function_body(body)
        if not docstring:
            body_doc = ast.get_docstring(node) or ""
            docstring = body_doc.splitlines()[0] if body_doc else ""
        return cls(
            name=node.name,
            params=params_from_body(body),
            body=body,
            docstring=docstring,
            version=version,
            provenance=provenance,
        )

    @property
    def required_params(self) -> tuple[Param, ...]:
        return tuple(p for p in self.params if p.default is None)

    def signature(self) -> str:
        parts = []
        for p in self.params:
            parts.append(p.name if p.default is None else f"{p.name}={p.default}")
        return f"{self.name}({', '.join(parts)})"

    def body_sha256(self) -> str:
        return hashlib.sha256(self.body.encode("utf-8")).hexdigest()

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": [p.to_dict() for p in self.params],
            "body": self.body,
            "docstring": self.docstring,
            "version": self.version,
            "provenance": self.provenance.value,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "LibraryFunction":
        return cls(
            name=data["name"],
            params=tuple(Param.from_dict(p) for p in data["params"]),
            body=data["body"],
            docstring=data.get("docstring", ""),
            version=int(data.get("version", 1)),
            provenance=Provenance(data.get("provenance", "seed")),
        )


@dataclass(frozen=True)
class LibraryUpdate:
    """One agent-requested mutation: add, replace or remove a function."""

    action: UpdateAction
    name: str
    function: Optional[LibraryFunction] = None  # absent for remove
    reason: str = ""

    def __post_init__(self):
        if self.action is UpdateAction.REMOVE:
            if self.function is not None:
                raise ValueError("remove carries no function body")
        elif self.function is None:
            raise ValueError(f"{self.action.value} requires a function body")
        elif self.function.name != self.name:
            raise ValueError("update name does not match the function it carries")

    def to_dict(self) -> dict:
        return {
            "action": self.action.value,
            "name": self.name,
            "function": self.function.to_dict() if self.function else None,
            "reason": self.reason,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "LibraryUpdate":
        fn = data.get("function")
        return cls(
            action=UpdateAction(data["action"]),
            name=data["name"],
            function=LibraryFunction.from_dict(fn) if fn else None,
            reason=data.get("reason", ""),
        )


@dataclass(frozen=True)
class FunctionLibrary:
    functions: Mapping[str, LibraryFunction] = field(default_factory=dict)
    library_version: int = 1
    parent_ref: Optional[str] = None

    def __contains__(self, name: str) -> bool:
        return name in self.functions

    def __iter__(self) -> Iterator[LibraryFunction]:
        for name in sorted(self.functions):
            yield self.functions[name]

    def __len__(self) -> int:
        return len(self.functions)

    def lookup(self, name: str) -> LibraryFunction:
        try:
            return self.functions[name]
        except KeyError:
            raise UnknownFunction(f"no function named '{name}' in library") from None

    def names(self) -> list[str]:
        return sorted(self.functions)

    def fork(self, parent_ref: str) -> "FunctionLibrary":
        """Copy-on-write child; shares function records, records lineage."""
        return FunctionLibrary(
            functions=dict(self.functions),
            library_version=self.library_version,
            parent_ref=parent_ref,
        )

    def signature_index(self) -> str:
        """One line per function: signature plus docstring, lexicographic by name."""
        lines = []
        for fn in self:
            doc = f"  # {fn.docstring}" if fn.docstring else ""
            lines.append(f"{fn.signature()}{doc}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "library_version": self.library_version,
            "parent_ref": self.parent_ref,
            "functions": [fn.to_dict() for fn in self],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "FunctionLibrary":
        fns = {f["name"]: LibraryFunction.from_dict(f) for f in data["functions"]}
        return cls(
            functions=fns,
            library_version=int(data["library_version"]),
            parent_ref=data.get("parent_ref"),
        )


def apply_update(lib: FunctionLibrary, update: LibraryUpdate) -> FunctionLibrary:
    """Apply one mutation, returning a new snapshot with library_version + 1.

    Add requires the name to be absent, replace/remove require it present.
    Replace bumps the function's own version by exactly one.
    """
    functions = dict(lib.functions)
    if update.action is UpdateAction.ADD:
        if update.name in functions:
            raise NameConflict(f"function '{update.name}' already exists; use replace")
        incoming = update.function
        provenance = (
            incoming.provenance
            if incoming.provenance is not Provenance.SEED
            else Provenance.AGENT_COMPOSED
        )
        functions[update.name] = replace(incoming, version=1, provenance=provenance)
    elif update.action is UpdateAction.REPLACE:
        if update.name not in functions:
            raise UnknownFunction(f"cannot replace unknown function '{update.name}'")
        old = functions[update.name]
        functions[update.name] = replace(
            update.function,
            version=old.version + 1,
            provenance=Provenance.AGENT_UPDATED,
        )
    elif update.action is UpdateAction.REMOVE:
        if update.name not in functions:
            raise UnknownFunction(f"cannot remove unknown function '{update.name}'")
        del functions[update.name]
    return FunctionLibrary(
        functions=functions,
        library_version=lib.library_version + 1,
        parent_ref=lib.parent_ref,
    )


def emit_prelude(lib: FunctionLibrary) -> str:
    """Deterministic prelude text: header comment plus every body, lexicographic by name.

    Two emissions of the same snapshot are byte-identical.
    """
    lines = [
        PRELUDE_HEADER,
        f"# version: {lib.library_version}",
        f"# functions: {len(lib)}",
    ]
    chunks = ["\n".join(lines)]
    for fn in lib:
        chunks.append(fn.body)
    return "\n\n\n".join(chunks) + "\n"
