"""Domain types for the three agent roles and their structured outputs."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Mapping, Optional

from ..errors import EmptyDescription
from ..kinds import KIND_ORDER, SubProcessKind


class Role(str, Enum):
    DIRECTOR = "director"
    PROGRAMMER = "programmer"
    REVIEWER = "reviewer"


class Verdict(str, Enum):
    PASS = "pass"
    REJECT = "reject"


class TargetHint(str, Enum):
    REFINE_ARGUMENTS = "refine_arguments"
    UPDATE_LIBRARY = "update_library"


@dataclass(frozen=True)
class VideoDescription:
    id: str
    text: str

    def __post_init__(self):
        if not self.text.strip():
            raise EmptyDescription("video description is empty")
        if not self.id:
            raise ValueError("description id must be non-empty")


@dataclass(frozen=True)
class AgentConfig:
    role: Role
    backend_ref: str = "default"
    model_id: str = "gpt-4-vision"
    temperature: float = 0.2
    prompt_template_ref: str = ""
    rag_top_k: int = 0
    parse_retries: int = 2

    def __post_init__(self):
        if not 0.0 <= self.temperature <= 2.0:
            raise ValueError("temperature must be within [0, 2]")
        if self.rag_top_k < 0 or self.parse_retries < 0:
            raise ValueError("rag_top_k and parse_retries must be non-negative")


@dataclass(frozen=True)
class SubProcessSpec:
    """One enriched directive covering a single mise-en-scene aspect."""

    kind: SubProcessKind
    guidance: str
    order_index: int
    motions: tuple[str, ...] = ()  # declared motion labels, motion kind only

    def __post_init__(self):
        if not self.guidance.strip():
            raise ValueError(f"empty guidance for sub-process '{self.kind.value}'")
        if self.order_index != self.kind.order_index:
            raise ValueError(
                f"order_index {self.order_index} does not match canonical position "
                f"of '{self.kind.value}'"
            )

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "guidance": self.guidance,
            "order_index": self.order_index,
            "motions": list(self.motions),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "SubProcessSpec":
        kind = SubProcessKind(data["kind"])
        return cls(
            kind=kind,
            guidance=data["guidance"],
            order_index=data.get("order_index", kind.order_index),
            motions=tuple(data.get("motions", ())),
        )


@dataclass(frozen=True)
class Decomposition:
    """Exactly five sub-process specs, one per kind, in canonical order."""

    items: tuple[SubProcessSpec, ...]
    source_description_id: str

    def __post_init__(self):
        if len(self.items) != 5:
            raise ValueError(f"decomposition needs 5 items, got {len(self.items)}")
        kinds = [item.kind for item in self.items]
        if kinds != list(KIND_ORDER):
            raise ValueError(f"decomposition kinds out of order or duplicated: {kinds}")

    def __iter__(self):
        return iter(self.items)

    def spec_for(self, kind: SubProcessKind) -> SubProcessSpec:
        return self.items[kind.order_index]

    def to_dict(self) -> dict:
        return {
            "source_description_id": self.source_description_id,
            "items": [item.to_dict() for item in self.items],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Decomposition":
        items = sorted(
            (SubProcessSpec.from_dict(item) for item in data["items"]),
            key=lambda s: s.order_index,
        )
        return cls(items=tuple(items), source_description_id=data["source_description_id"])


@dataclass(frozen=True)
class QuestionAnswer:
    question: str
    answer: str
    ok: bool

    def to_dict(self) -> dict:
        return {"question": self.question, "answer": self.answer, "ok": self.ok}

    @classmethod
    def from_dict(cls, data: Mapping) -> "QuestionAnswer":
        return cls(question=data["question"], answer=data["answer"], ok=bool(data["ok"]))


@dataclass(frozen=True)
class Review:
    """Structured reviewer verdict with per-question answers and suggestions."""

    verdict: Verdict
    question_answers: tuple[QuestionAnswer, ...] = ()
    suggestions: tuple[str, ...] = ()
    target_hint: Optional[TargetHint] = None
    iteration: int = 0
    synthetic: bool = False  # constructed from an engine error, not a reviewer call

    def __post_init__(self):
        if self.verdict is Verdict.REJECT and not any(not qa.ok for qa in self.question_answers):
            raise ValueError("a rejecting review needs at least one failing answer")

    def with_hint(self, hint: TargetHint) -> "Review":
        return replace(self, target_hint=hint)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "question_answers": [qa.to_dict() for qa in self.question_answers],
            "suggestions": list(self.suggestions),
            "target_hint": self.target_hint.value if self.target_hint else None,
            "iteration": self.iteration,
            "synthetic": self.synthetic,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Review":
        hint = data.get("target_hint")
        return cls(
            verdict=Verdict(data["verdict"]),
            question_answers=tuple(QuestionAnswer.from_dict(qa) for qa in data["question_answers"]),
            suggestions=tuple(data.get("suggestions", ())),
            target_hint=TargetHint(hint) if hint else None,
            iteration=data.get("iteration", 0),
            synthetic=data.get("synthetic", False),
        )


def synthetic_reject(error_text: str, iteration: int) -> Review:
    """Wrap an engine failure as a rejecting review so repair flows through the programmer."""
    excerpt = error_text.strip()
    return Review(
        verdict=Verdict.REJECT,
        question_answers=(
            QuestionAnswer(
                question="Did the script execute without engine errors?",
                answer=excerpt,
                ok=False,
            ),
        ),
        suggestions=(f"Fix the engine error: {excerpt}",),
        target_hint=TargetHint.UPDATE_LIBRARY,
        iteration=iteration,
        synthetic=True,
    )


@dataclass(frozen=True)
class MessagePart:
    """One content part of a chat message: text, or an image carried as bytes."""

    type: str  # "text" | "image"
    text: str = ""
    image_bytes: bytes = b""
    image_ref: str = ""  # where the image came from, for the event log

    def to_log_dict(self) -> dict:
        if self.type == "text":
            return {"type": "text", "text": self.text}
        import hashlib

        return {
            "type": "image",
            "ref": self.image_ref,
            "sha256": hashlib.sha256(self.image_bytes).hexdigest(),
            "bytes": len(self.image_bytes),
        }


@dataclass(frozen=True)
class ChatMessage:
    role: str  # "system" | "user" | "assistant"
    parts: tuple[MessagePart, ...]

    @classmethod
    def text(cls, role: str, text: str) -> "ChatMessage":
        return cls(role=role, parts=(MessagePart(type="text", text=text),))

    def to_log_dict(self) -> dict:
        return {"role": self.role, "parts": [p.to_log_dict() for p in self.parts]}


@dataclass(frozen=True)
class ChatRequest:
    model_id: str
    temperature: float
    messages: tuple[ChatMessage, ...]

    def has_images(self) -> bool:
        return any(p.type == "image" for m in self.messages for p in m.parts)

    def to_log_dict(self) -> dict:
        return {
            "model_id": self.model_id,
            "temperature": self.temperature,
            "messages": [m.to_log_dict() for m in self.messages],
        }


@dataclass(frozen=True)
class ChatExchange:
    """One backend round trip, recorded verbatim in the session event log."""

    request: ChatRequest
    response_text: str
    usage: Mapping = field(default_factory=dict)
    latency_s: float = 0.0
    attempts: int = 1

    def to_log_dict(self) -> dict:
        return {
            "request": self.request.to_log_dict(),
            "response_text": self.response_text,
            "usage": dict(self.usage),
            "latency_s": self.latency_s,
            "attempts": self.attempts,
        }
