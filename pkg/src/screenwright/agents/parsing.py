"""Extraction and validation of structured agent output.

Agents answer in free text with an embedded JSON block (and, for code, a
fenced block); the extractor takes the last well-formed one. Parsing is pure
and deterministic: the same raw text always yields the same value, so every
recorded exchange replays to the same parse.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Any, Optional

from ..errors import ProtocolError
from ..kinds import KIND_ORDER, SubProcessKind
from .types import QuestionAnswer, Review, TargetHint, Verdict


class ParseFailure(Exception):
    """Internal: one parse attempt failed; the caller may re-prompt correctively."""


_FENCE = re.compile(r"```[a-zA-Z0-9_+-]*[ \t]*\n(.*?)```", re.DOTALL)


def extract_code_blocks(text: str) -> list[str]:
    return [m.group(1).strip("\n") for m in _FENCE.finditer(text)]


def extract_last_code_block(text: str) -> str:
    blocks = [b for b in extract_code_blocks(text) if b.strip()]
    if not blocks:
        raise ParseFailure("no fenced code block found in the response")
    return blocks[-1]


def extract_json_values(text: str) -> list[Any]:
    """Every well-formed JSON object or array embedded in the text, in order."""
    decoder = json.JSONDecoder()
    values = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "{[":
            try:
                value, end = decoder.raw_decode(text, i)
            except ValueError:
                i += 1
                continue
            values.append(value)
            i = end
        else:
            i += 1
    return values


def extract_last_json_object(text: str) -> dict:
    objects = [v for v in extract_json_values(text) if isinstance(v, dict)]
    if not objects:
        raise ParseFailure("no JSON object found in the response")
    return objects[-1]


class Schema:
    """A named expected shape: parse(raw) returns the typed value or raises ParseFailure."""

    name = "schema"

    def parse(self, raw: str) -> Any:
        raise NotImplementedError

    def describe(self) -> str:
        return self.name


def parse_structured(raw: str, schema: Schema) -> Any:
    """Single-shot parse; deterministic, no side effects. Raises ParseFailure."""
    if not raw or not raw.strip():
        raise ParseFailure("empty response")
    return schema.parse(raw)


def parse_structured_or_protocol_error(raw: str, schema: Schema) -> Any:
    """Parse once; convert failure to the public typed error."""
    try:
        return parse_structured(raw, schema)
    except ParseFailure as exc:
        raise ProtocolError(f"{schema.describe()}: {exc}") from exc


@dataclass
class DecompositionSchema(Schema):
    """Director output: JSON with a five-item subprocesses list, one per kind."""

    description_text: str = ""
    name = "decomposition"

    def parse(self, raw: str) -> list[dict]:
        data = extract_last_json_object(raw)
        items = data.get("subprocesses")
        if not isinstance(items, list):
            raise ParseFailure("JSON object has no 'subprocesses' list")
        seen: dict[str, dict] = {}
        for item in items:
            if not isinstance(item, dict):
                raise ParseFailure("each subprocess entry must be an object")
            kind_raw = str(item.get("kind", "")).strip().lower()
            try:
                kind = SubProcessKind(kind_raw)
            except ValueError:
                raise ParseFailure(f"unknown sub-process kind '{kind_raw}'") from None
            if kind.value in seen:
                raise ParseFailure(f"duplicate sub-process kind '{kind.value}'")
            guidance = item.get("guidance")
            if not isinstance(guidance, str) or not guidance.strip():
                raise ParseFailure(f"missing or empty guidance for '{kind.value}'")
            if guidance.strip() == self.description_text.strip():
                raise ParseFailure(
                    f"guidance for '{kind.value}' must enrich the description, not repeat it"
                )
            motions = item.get("motions", [])
            if not isinstance(motions, list) or not all(isinstance(m, str) for m in motions):
                raise ParseFailure(f"motions for '{kind.value}' must be a list of strings")
            seen[kind.value] = {
                "kind": kind.value,
                "guidance": guidance.strip(),
                "order_index": kind.order_index,
                "motions": [m.strip() for m in motions if m.strip()],
            }
        missing = [k.value for k in KIND_ORDER if k.value not in seen]
        if missing:
            raise ParseFailure(f"missing sub-process kinds: {', '.join(missing)}")
        if len(items) != 5:
            raise ParseFailure(f"expected exactly 5 subprocesses, got {len(items)}")
        return [seen[k.value] for k in KIND_ORDER]


@dataclass
class SnippetSchema(Schema):
    """Programmer output: a fenced code block, plus an optional JSON metadata object."""

    name = "script snippet"

    def parse(self, raw: str) -> dict:
        code = extract_last_code_block(raw)
        capability_gap = False
        notes = ""
        try:
            meta = extract_last_json_object(raw)
        except ParseFailure:
            meta = {}
        if isinstance(meta.get("capability_gap"), bool):
            capability_gap = meta["capability_gap"]
        if isinstance(meta.get("notes"), str):
            notes = meta["notes"]
        return {"source": code, "capability_gap": capability_gap, "notes": notes}


_VERDICT_LINE = re.compile(r"^\s*verdict\s*:\s*(pass|reject)\s*$", re.IGNORECASE | re.MULTILINE)
_BULLET_LINE = re.compile(r"^\s*[-*]\s+(.+?)\s*$", re.MULTILINE)


@dataclass
class ReviewSchema(Schema):
    """Reviewer output: a JSON object, with a plain `Verdict:` line accepted as fallback."""

    iteration: int = 0
    name = "review"

    def parse(self, raw: str) -> Review:
        try:
            data = extract_last_json_object(raw)
        except ParseFailure:
            return self._parse_plain(raw)
        return self._parse_json(data)

    def _parse_json(self, data: dict) -> Review:
        verdict_raw = str(data.get("verdict", "")).strip().lower()
        if verdict_raw not in ("pass", "reject"):
            raise ParseFailure(f"verdict must be Pass or Reject, got '{verdict_raw}'")
        verdict = Verdict(verdict_raw)
        answers = []
        for qa in data.get("answers", []):
            if not isinstance(qa, dict) or "question" not in qa or "ok" not in qa:
                raise ParseFailure("each answer needs 'question' and 'ok' fields")
            answers.append(
                QuestionAnswer(
                    question=str(qa["question"]),
                    answer=str(qa.get("answer", "")),
                    ok=bool(qa["ok"]),
                )
            )
        suggestions = data.get("suggestions", [])
        if not isinstance(suggestions, list) or not all(isinstance(s, str) for s in suggestions):
            raise ParseFailure("'suggestions' must be a list of strings")
        hint_raw = data.get("target_hint")
        hint: Optional[TargetHint] = None
        if hint_raw not in (None, ""):
            try:
                hint = TargetHint(str(hint_raw).strip().lower())
            except ValueError:
                raise ParseFailure(f"unknown target_hint '{hint_raw}'") from None
        if verdict is Verdict.REJECT and not any(not qa.ok for qa in answers):
            # a bare reject with only suggestions still identifies what failed
            if not suggestions:
                raise ParseFailure("a Reject needs a failing answer or at least one suggestion")
            answers.extend(
                QuestionAnswer(question="overall evaluation", answer=s, ok=False)
                for s in suggestions
            )
        return Review(
            verdict=verdict,
            question_answers=tuple(answers),
            suggestions=tuple(s.strip() for s in suggestions),
            target_hint=hint,
            iteration=self.iteration,
        )

    def _parse_plain(self, raw: str) -> Review:
        match = _VERDICT_LINE.search(raw)
        if not match:
            raise ParseFailure("no JSON review object and no 'Verdict:' line found")
        verdict = Verdict(match.group(1).lower())
        bullets = tuple(m.group(1) for m in _BULLET_LINE.finditer(raw))
        answers: tuple[QuestionAnswer, ...] = ()
        if verdict is Verdict.REJECT:
            if not bullets:
                raise ParseFailure("a plain-text Reject needs at least one suggestion bullet")
            answers = tuple(
                QuestionAnswer(question="overall evaluation", answer=b, ok=False) for b in bullets
            )
        return Review(
            verdict=verdict,
            question_answers=answers,
            suggestions=bullets,
            iteration=self.iteration,
        )


@dataclass
class LibraryUpdateSchema(Schema):
    """Programmer library-update proposal: JSON action object plus a code block for the body."""

    name = "library update"

    def parse(self, raw: str) -> dict:
        data = extract_last_json_object(raw)
        action = str(data.get("action", "")).strip().lower()
        if action not in ("add", "replace", "remove"):
            raise ParseFailure(f"action must be add, replace or remove, got '{action}'")
        fn_name = str(data.get("name", "")).strip()
        if not fn_name:
            raise ParseFailure("update needs the target function 'name'")
        body = None
        if action in ("add", "replace"):
            body = extract_last_code_block(raw)
        return {
            "action": action,
            "name": fn_name,
            "body": body,
            "reason": str(data.get("reason", "")).strip(),
        }
