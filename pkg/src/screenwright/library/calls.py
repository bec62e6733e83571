"""Call extraction and snippet validation against a library snapshot.

Extraction is a token-level scan, not a full parse: it picks up bare-identifier
call expressions (name followed by an argument list) and splits the argument
text at top-level commas. Dotted calls like bpy.ops.render.render() are engine
API, not library calls, and are skipped.
"""

from __future__ import annotations

import io
import keyword
import tokenize
from dataclasses import dataclass

from ..errors import SourceParseError
from ..kinds import SubProcessKind
from .model import FunctionLibrary


@dataclass(frozen=True)
class ExtractedCall:
    name: str
    args: tuple[str, ...] = ()  # positional argument source text
    kwargs: tuple[tuple[str, str], ...] = ()  # (name, source text)
    line: int = 0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "args": list(self.args),
            "kwargs": [[k, v] for k, v in self.kwargs],
            "line": self.line,
        }

    @classmethod
    def from_dict(cls, data) -> "ExtractedCall":
        return cls(
            name=data["name"],
            args=tuple(data["args"]),
            kwargs=tuple((k, v) for k, v in data["kwargs"]),
            line=data.get("line", 0),
        )


@dataclass(frozen=True)
class ScriptSnippet:
    """Engine-script source for one sub-process, plus its extracted calls."""

    subprocess_kind: SubProcessKind
    source: str
    calls: tuple[ExtractedCall, ...]
    iteration_of_origin: int = 1
    library_version: int = 1
    capability_gap: bool = False  # programmer flagged it could not express the fix

    @classmethod
    def from_source(
        cls,
        kind: SubProcessKind,
        source: str,
        iteration_of_origin: int = 1,
        library_version: int = 1,
        capability_gap: bool = False,
    ) -> "ScriptSnippet":
        return cls(
            subprocess_kind=kind,
            source=source,
            calls=extract_calls(source),
            iteration_of_origin=iteration_of_origin,
            library_version=library_version,
            capability_gap=capability_gap,
        )

    def to_dict(self) -> dict:
        return {
            "subprocess_kind": self.subprocess_kind.value,
            "source": self.source,
            "calls": [c.to_dict() for c in self.calls],
            "iteration_of_origin": self.iteration_of_origin,
            "library_version": self.library_version,
            "capability_gap": self.capability_gap,
        }

    @classmethod
    def from_dict(cls, data) -> "ScriptSnippet":
        return cls(
            subprocess_kind=SubProcessKind(data["subprocess_kind"]),
            source=data["source"],
            calls=tuple(ExtractedCall.from_dict(c) for c in data["calls"]),
            iteration_of_origin=data.get("iteration_of_origin", 1),
            library_version=data.get("library_version", 1),
            capability_gap=data.get("capability_gap", False),
        )


def _significant(tok: tokenize.TokenInfo) -> bool:
    return tok.type not in (
        tokenize.NL,
        tokenize.NEWLINE,
        tokenize.COMMENT,
        tokenize.INDENT,
        tokenize.DEDENT,
        tokenize.ENCODING,
    )


def extract_calls(source: str) -> tuple[ExtractedCall, ...]:
    """Scan source for bare-identifier calls; raises SourceParseError if unscannable."""
    if not source.strip():
        raise SourceParseError("snippet source is empty")
    try:
        tokens = [t for t in tokenize.generate_tokens(io.StringIO(source).readline) if _significant(t)]
    except (tokenize.TokenError, IndentationError, SyntaxError) as exc:
        raise SourceParseError(f"snippet could not be tokenized: {exc}") from exc

    calls: list[ExtractedCall] = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok.type == tokenize.NAME and not keyword.iskeyword(tok.string):
            prev = tokens[i - 1] if i > 0 else None
            nxt = tokens[i + 1] if i + 1 < len(tokens) else None
            preceded_by_dot = prev is not None and prev.type == tokenize.OP and prev.string == "."
            is_definition = prev is not None and prev.type == tokenize.NAME and prev.string in ("def", "class")
            if nxt is not None and nxt.type == tokenize.OP and nxt.string == "(" and not preceded_by_dot and not is_definition:
                arg_tokens, end = _collect_args(tokens, i + 1)
                args, kwargs = _split_arguments(arg_tokens)
                calls.append(ExtractedCall(name=tok.string, args=args, kwargs=kwargs, line=tok.start[0]))
                # keep scanning inside the argument list for nested calls
                i += 2
                continue
        i += 1
    return tuple(calls)


def _collect_args(tokens, open_index: int):
    """Return tokens strictly inside the paren group opened at open_index, plus the close index."""
    depth = 0
    inner = []
    for j in range(open_index, len(tokens)):
        tok = tokens[j]
        if tok.type == tokenize.OP and tok.string in "([{":
            depth += 1
            if depth == 1:
                continue
        elif tok.type == tokenize.OP and tok.string in ")]}":
            depth -= 1
            if depth == 0:
                return inner, j
        inner.append(tok)
    raise SourceParseError("unbalanced parentheses in snippet")


def _split_arguments(arg_tokens):
    """Split the flat token list at depth-0 commas; classify name= pairs as kwargs."""
    groups: list[list[tokenize.TokenInfo]] = [[]]
    depth = 0
    for tok in arg_tokens:
        if tok.type == tokenize.OP and tok.string in "([{":
            depth += 1
        elif tok.type == tokenize.OP and tok.string in ")]}":
            depth -= 1
        if depth == 0 and tok.type == tokenize.OP and tok.string == ",":
            groups.append([])
            continue
        groups[-1].append(tok)
    groups = [g for g in groups if g]

    args: list[str] = []
    kwargs: list[tuple[str, str]] = []
    for group in groups:
        if (
            len(group) >= 2
            and group[0].type == tokenize.NAME
            and group[1].type == tokenize.OP
            and group[1].string == "="
        ):
            kwargs.append((group[0].string, _render(group[2:])))
        else:
            args.append(_render(group))
    return tuple(args), tuple(kwargs)


def _render(group) -> str:
    return " ".join(tok.string for tok in group).strip()


@dataclass(frozen=True)
class ArityIssue:
    function: str
    message: str
    line: int = 0

    def to_dict(self) -> dict:
        return {"function": self.function, "message": self.message, "line": self.line}


@dataclass(frozen=True)
class ValidationReport:
    unknown_calls: tuple[str, ...] = ()
    arity_mismatches: tuple[ArityIssue, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.unknown_calls and not self.arity_mismatches

    def describe(self) -> str:
        if self.ok:
            return "ok"
        parts = []
        for name in self.unknown_calls:
            parts.append(f"unknown function: {name}")
        for issue in self.arity_mismatches:
            parts.append(f"{issue.function}: {issue.message}")
        return "; ".join(parts)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "unknown_calls": list(self.unknown_calls),
            "arity_mismatches": [i.to_dict() for i in self.arity_mismatches],
        }


def validate_snippet(snippet: ScriptSnippet, lib: FunctionLibrary) -> ValidationReport:
    """Check every extracted call: the name must resolve and the arguments must fit."""
    unknown: list[str] = []
    issues: list[ArityIssue] = []
    for call in snippet.calls:
        if call.name not in lib:
            if call.name not in unknown:
                unknown.append(call.name)
            continue
        fn = lib.lookup(call.name)
        param_names = [p.name for p in fn.params]
        if len(call.args) > len(param_names):
            issues.append(
                ArityIssue(
                    call.name,
                    f"takes at most {len(param_names)} positional arguments, got {len(call.args)}",
                    call.line,
                )
            )
            continue
        covered = set(param_names[: len(call.args)])
        for kw_name, _ in call.kwargs:
            if kw_name not in param_names:
                issues.append(ArityIssue(call.name, f"unknown named argument '{kw_name}'", call.line))
            elif kw_name in covered:
                issues.append(ArityIssue(call.name, f"multiple values for argument '{kw_name}'", call.line))
            else:
                covered.add(kw_name)
        missing = [p.name for p in fn.required_params if p.name not in covered]
        if missing:
            issues.append(
                ArityIssue(
                    call.name,
                    f"missing required arguments: {', '.join(missing)}",
                    call.line,
                )
            )
    return ValidationReport(unknown_calls=tuple(unknown), arity_mismatches=tuple(issues))


def validate_source(source: str, lib: FunctionLibrary, kind: SubProcessKind = SubProcessKind.SCENE) -> ValidationReport:
    """Convenience: extract then validate in one step."""
    snippet = ScriptSnippet.from_source(kind, source, library_version=lib.library_version)
    return validate_snippet(snippet, lib)
