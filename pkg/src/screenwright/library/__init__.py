"""Function library: versioned storage, validation, prelude emission."""

from .calls import (
    ArityIssue,
    ExtractedCall,
    ScriptSnippet,
    ValidationReport,
    extract_calls,
    validate_snippet,
    validate_source,
)
from .model import (
    FunctionLibrary,
    LibraryFunction,
    LibraryUpdate,
    Param,
    Provenance,
    UpdateAction,
    apply_update,
    emit_prelude,
)
from .seed import SEED_NAMES, seed_body, seed_library
from .store import list_libraries, load_library, promote_function, save_library

__all__ = [
    "ArityIssue",
    "ExtractedCall",
    "FunctionLibrary",
    "LibraryFunction",
    "LibraryUpdate",
    "Param",
    "Provenance",
    "ScriptSnippet",
    "SEED_NAMES",
    "UpdateAction",
    "ValidationReport",
    "apply_update",
    "emit_prelude",
    "extract_calls",
    "list_libraries",
    "load_library",
    "promote_function",
    "save_library",
    "seed_body",
    "seed_library",
    "validate_snippet",
    "validate_source",
]
