"""On-disk layout for published libraries.

A library named <name> persists as:

    <root>/<name>/manifest.json          versions, provenance, content hashes
    <root>/<name>/fn/<function>.txt      latest body per function

Hashes are SHA-256 over the body text, so history stays diffable and a reload
reproduces the prelude byte for byte.
"""

from __future__ import annotations

import json
from pathlib import Path

from ..errors import ConfigError, UnknownFunction
from .model import FunctionLibrary, LibraryFunction, Param, Provenance

SCHEMA_VERSION = 1


def save_library(lib: FunctionLibrary, root: Path, name: str) -> Path:
    lib_dir = Path(root) / name
    fn_dir = lib_dir / "fn"
    fn_dir.mkdir(parents=True, exist_ok=True)
    entries = []
    for fn in lib:
        body_path = fn_dir / f"{fn.name}.txt"
        body_path.write_text(fn.body + "\n", encoding="utf-8")
        entries.append(
            {
                "name": fn.name,
                "version": fn.version,
                "provenance": fn.provenance.value,
                "docstring": fn.docstring,
                "params": [p.to_dict() for p in fn.params],
                "sha256": fn.body_sha256(),
                "file": f"fn/{fn.name}.txt",
            }
        )
    # drop stale bodies from removed functions
    for stray in fn_dir.glob("*.txt"):
        if stray.stem not in lib.functions:
            stray.unlink()
    manifest = {
        "schema_version": SCHEMA_VERSION,
        "name": name,
        "library_version": lib.library_version,
        "parent_ref": lib.parent_ref,
        "functions": entries,
    }
    (lib_dir / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return lib_dir


def load_library(root: Path, name: str) -> FunctionLibrary:
    lib_dir = Path(root) / name
    manifest_path = lib_dir / "manifest.json"
    if not manifest_path.exists():
        raise ConfigError(f"no library manifest at {manifest_path}")
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    functions = {}
    for entry in manifest["functions"]:
        body = (lib_dir / entry["file"]).read_text(encoding="utf-8")
        fn = LibraryFunction(
            name=entry["name"],
            params=tuple(Param.from_dict(p) for p in entry["params"]),
            body=body,
            docstring=entry.get("docstring", ""),
            version=int(entry["version"]),
            provenance=Provenance(entry["provenance"]),
        )
        if fn.body_sha256() != entry["sha256"]:
            raise ConfigError(
                f"body hash mismatch for function '{fn.name}' in library '{name}'"
            )
        functions[fn.name] = fn
    return FunctionLibrary(
        functions=functions,
        library_version=int(manifest["library_version"]),
        parent_ref=manifest.get("parent_ref"),
    )


def list_libraries(root: Path) -> list[str]:
    root = Path(root)
    if not root.exists():
        return []
    return sorted(p.parent.name for p in root.glob("*/manifest.json"))


def promote_function(
    session_library: FunctionLibrary, base: FunctionLibrary, fn_name: str
) -> FunctionLibrary:
    """Copy one session-composed function into a base library at version 1."""
    if fn_name not in session_library:
        raise UnknownFunction(f"session library has no function '{fn_name}'")
    from .model import LibraryUpdate, UpdateAction, apply_update

    fn = session_library.lookup(fn_name)
    action = UpdateAction.REPLACE if fn_name in base else UpdateAction.ADD
    update = LibraryUpdate(
        action=action,
        name=fn_name,
        function=fn,
        reason="promoted from session library",
    )
    return apply_update(base, update)
