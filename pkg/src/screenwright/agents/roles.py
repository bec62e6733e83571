"""The three agent drivers: director, programmer, reviewer.

Each builds a prompt from its template (optionally with retrieved context),
calls its backend, and parses the reply against the role's schema. A reply
that violates the contract triggers a corrective re-prompt: the conversation
grows by the bad answer plus an error description, bounded by the configured
retry budget, after which a typed error is raised. No partial values escape.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from ..errors import ConfigError, ProtocolError, SourceParseError, ValidationError
from ..kinds import SubProcessKind
from ..library import (
    FunctionLibrary,
    LibraryFunction,
    LibraryUpdate,
    Provenance,
    ScriptSnippet,
    UpdateAction,
    validate_snippet,
)
from ..library.model import BodyParseError
from ..rag import RagStore, RetrievalResult, format_context
from .backends import ChatBackend
from .parsing import (
    DecompositionSchema,
    LibraryUpdateSchema,
    ParseFailure,
    ReviewSchema,
    Schema,
    SnippetSchema,
    parse_structured,
)
from .templates import TemplateSet
from .types import (
    AgentConfig,
    ChatExchange,
    ChatMessage,
    ChatRequest,
    Decomposition,
    MessagePart,
    Review,
    Role,
    SubProcessSpec,
    Verdict,
    VideoDescription,
)

CONTEXT_BUDGET_CHARS = 4000

CORRECTION_PREAMBLE = (
    "Your previous answer could not be used: {error}. "
    "Answer again, following the required output format exactly."
)


def format_review(review: Review) -> str:
    """Reviewer feedback as plain text for the programmer's prompt."""
    lines = [f"Verdict: {review.verdict.value.capitalize()}"]
    failing = [qa for qa in review.question_answers if not qa.ok]
    if failing:
        lines.append("Failed checks:")
        lines.extend(f"- {qa.question} -> {qa.answer}" for qa in failing)
    if review.suggestions:
        lines.append("Suggestions:")
        lines.extend(f"- {s}" for s in review.suggestions)
    return "\n".join(lines)


class AgentRole:
    """Shared plumbing: retrieval, prompting, the corrective parse loop."""

    role: Role

    def __init__(

        self,
        config: AgentConfig,
        backend: ChatBackend,
        templates: Optional[TemplateSet] = None,
        rag: Optional[RagStore] = None,
        context_budget_chars: int = CONTEXT_BUDGET_CHARS,
    ):
        if config.role is not self.role:
            raise ConfigError(f"config role {config.role.value} given to a {self.role.value} agent")
        self.config = config
        self.backend = backend
        self.templates = templates or TemplateSet()
        self.rag = rag
        self.context_budget_chars = context_budget_chars

    def _retrieved_context(self, query: str) -> str:
        if self.rag is None or self.config.rag_top_k < 1 or len(self.rag) == 0:
            return format_context(RetrievalResult.empty(), self.context_budget_chars)
        result = self.rag.retrieve(f"{self.role.value}: {query}", self.config.rag_top_k)
        return format_context(result, self.context_budget_chars)

    def _request(self, messages: tuple[ChatMessage, ...]) -> ChatRequest:
        return ChatRequest(
            model_id=self.config.model_id,
            temperature=self.config.temperature,
            messages=messages,
        )

    def _structured_call(self, first_message: ChatMessage, schema: Schema):
        """Call + parse with corrective re-prompts. Returns (value, exchanges)."""
        messages: tuple[ChatMessage, ...] = (first_message,)
        exchanges: list[ChatExchange] = []
        attempts = self.config.parse_retries + 1
        last_error = "no attempt made"
        for _ in range(attempts):
            exchange = self.backend.complete(self._request(messages))
            exchanges.append(exchange)
            try:
                return parse_structured(exchange.response_text, schema), exchanges
            except ParseFailure as exc:
                last_error = str(exc)
                messages = messages + (
                    ChatMessage.text("assistant", exchange.response_text),
                    ChatMessage.text("user", CORRECTION_PREAMBLE.format(error=last_error)),
                )
        raise ProtocolError(f"{schema.describe()}: {last_error}")


class Director(AgentRole):
    role = Role.DIRECTOR

    def direct(self, q: VideoDescription) -> tuple[Decomposition, list[ChatExchange]]:
        prompt = self.templates.render(
            "director",
            {
                "description": q.text,
                "retrieved_context": self._retrieved_context(q.text),
            },
        )
        schema = DecompositionSchema(description_text=q.text)
        items, exchanges = self._structured_call(ChatMessage.text("user", prompt), schema)
        decomposition = Decomposition(
            items=tuple(SubProcessSpec.from_dict(item) for item in items),
            source_description_id=q.id,
        )
        return decomposition, exchanges


class Programmer(AgentRole):
    role = Role.PROGRAMMER

    def program(
        self,
        spec: SubProcessSpec,
        lib: FunctionLibrary,
        feedback: Optional[Review] = None,
        iteration: int = 1,
    ) -> tuple[ScriptSnippet, list[ChatExchange]]:
        """Produce a snippet that validates against the library, or raise.

        Validation is a postcondition: a reply whose calls do not resolve is
        re-prompted with the validation report, and after the retry budget the
        unknown names surface as a ValidationError.
        """
        if len(lib) == 0:
            raise ConfigError("programmer needs a non-empty function library")
        if feedback is not None and feedback.verdict is not Verdict.REJECT:
            raise ValueError("programmer feedback must be a rejecting review")
        prompt = self.templates.render(
            "programmer",
            {
                "kind": spec.kind.value,
                "guidance": spec.guidance,
                "library_index": lib.signature_index(),
                "feedback": format_review(feedback) if feedback else "(first attempt)",
                "retrieved_context": self._retrieved_context(spec.guidance),
            },
        )
        messages: tuple[ChatMessage, ...] = (ChatMessage.text("user", prompt),)
        exchanges: list[ChatExchange] = []
        attempts = self.config.parse_retries + 1
        last_error = "no attempt made"
        unknown_calls: list[str] = []
        for _ in range(attempts):
            exchange = self.backend.complete(self._request(messages))
            exchanges.append(exchange)
            try:
                parsed = parse_structured(exchange.response_text, SnippetSchema())
                snippet = ScriptSnippet.from_source(
                    spec.kind,
                    parsed["source"],
                    iteration_of_origin=iteration,
                    library_version=lib.library_version,
                    capability_gap=parsed["capability_gap"],
                )
            except (ParseFailure, SourceParseError) as exc:
                last_error = str(exc)
                unknown_calls = []
                messages = messages + (
                    ChatMessage.text("assistant", exchange.response_text),
                    ChatMessage.text("user", CORRECTION_PREAMBLE.format(error=last_error)),
                )
                continue
            report = validate_snippet(snippet, lib)
            if report.ok:
                return snippet, exchanges
            last_error = report.describe()
            unknown_calls = list(report.unknown_calls)
            messages = messages + (
                ChatMessage.text("assistant", exchange.response_text),
                ChatMessage.text(
                    "user",
                    "The snippet failed validation against the function library: "
                    f"{last_error}. Use only the listed functions with matching arguments.",
                ),
            )
        if unknown_calls:
            raise ValidationError(
                f"snippet still failed validation: {last_error}", unknown_calls=unknown_calls
            )
        raise ProtocolError(f"script snippet: {last_error}")

    def propose_update(
        self, lib: FunctionLibrary, review: Review
    ) -> tuple[LibraryUpdate, list[ChatExchange]]:
        """Ask for one add/replace/remove mutation in response to a rejecting review."""
        prompt = self.templates.render(
            "library_update",
            {
                "library_index": lib.signature_index(),
                "review": format_review(review),
                "retrieved_context": self._retrieved_context(format_review(review)),
            },
        )
        messages: tuple[ChatMessage, ...] = (ChatMessage.text("user", prompt),)
        exchanges: list[ChatExchange] = []
        attempts = self.config.parse_retries + 1
        last_error = "no attempt made"
        for _ in range(attempts):
            exchange = self.backend.complete(self._request(messages))
            exchanges.append(exchange)
            try:
                parsed = parse_structured(exchange.response_text, LibraryUpdateSchema())
                reason = parsed["reason"] or "; ".join(review.suggestions)
                if parsed["action"] == "remove":
                    update = LibraryUpdate(
                        action=UpdateAction.REMOVE, name=parsed["name"], reason=reason
                    )
                else:
                    fn = LibraryFunction.from_body(
                        parsed["body"], provenance=Provenance.AGENT_COMPOSED
                    )
                    if fn.name != parsed["name"]:
                        raise ParseFailure(
                            f"body defines '{fn.name}' but the update names '{parsed['name']}'"
                        )
                    update = LibraryUpdate(
                        action=UpdateAction(parsed["action"]),
                        name=parsed["name"],
                        function=fn,
                        reason=reason,
                    )
                return update, exchanges
            except (ParseFailure, BodyParseError) as exc:
                last_error = str(exc)
                messages = messages + (
                    ChatMessage.text("assistant", exchange.response_text),
                    ChatMessage.text("user", CORRECTION_PREAMBLE.format(error=last_error)),
                )
        raise ProtocolError(f"library update: {last_error}")


class Reviewer(AgentRole):
    role = Role.REVIEWER

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        if not getattr(self.backend, "supports_images", False):
            raise ConfigError("the reviewer's backend must support image inputs")

    def review(
        self,
        spec: SubProcessSpec,
        keyframe_paths: list[Path],
        checklist: str,
        coordinates_text: str = "",
        iteration: int = 0,
    ) -> tuple[Review, list[ChatExchange]]:
        """Structured verdict over keyframe screenshots plus sampled data."""
        if not keyframe_paths:
            raise ValueError("review needs at least one keyframe image")
        prompt = self.templates.render(
            "reviewer",
            {
                "kind": spec.kind.value,
                "guidance": spec.guidance,
                "checklist": checklist,
                "coordinates": coordinates_text or "(none)",
                "retrieved_context": self._retrieved_context(spec.guidance),
            },
        )
        parts = [MessagePart(type="text", text=prompt)]
        for path in keyframe_paths:
            parts.append(
                MessagePart(
                    type="image",
                    image_bytes=Path(path).read_bytes(),
                    image_ref=str(path),
                )
            )
        first = ChatMessage(role="user", parts=tuple(parts))
        review, exchanges = self._structured_call(first, ReviewSchema(iteration=iteration))
        return review, exchanges
