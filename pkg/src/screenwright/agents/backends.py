"""Chat-completion backends behind one contract.

`complete(request) -> ChatExchange`. The HTTP backend speaks the de-facto
chat API (messages array, content parts of type text or image). The mock
backend replays fixtures keyed by request hash and/or a scripted sequence
file, which is how tests and offline runs are driven.
"""

from __future__ import annotations

import base64
import hashlib
import json
import time
from pathlib import Path
from typing import Callable, Optional, Protocol, Sequence

from ..errors import BackendUnreachable, RateLimited
from .types import ChatExchange, ChatRequest

MAX_ATTEMPTS = 4
BACKOFF_BASE_S = 0.5


class ChatBackend(Protocol):
    supports_images: bool

    def complete(self, request: ChatRequest) -> ChatExchange: ...


def request_hash(request: ChatRequest) -> str:
    """Stable digest of a request, used to key mock fixtures."""
    canonical = json.dumps(request.to_log_dict(), sort_keys=True, ensure_ascii=True)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class HttpChatBackend:
    """Client for a chat-completions endpoint, with bounded backoff on rate limits."""

    supports_images = True

    def __init__(
        self,
        base_url: str,
        api_key: str,
        session=None,
        max_attempts: int = MAX_ATTEMPTS,
        sleep: Callable[[float], None] = time.sleep,
    ):
        import requests

        if not base_url:
            raise BackendUnreachable("no base URL configured for the chat backend")
        self.base_url = base_url.rstrip("/")
        self.api_key = api_key
        self.max_attempts = max_attempts
        self._sleep = sleep
        self._session = session or requests.Session()

    def _wire_messages(self, request: ChatRequest) -> list[dict]:
        messages = []
        for message in request.messages:
            parts = []
            for part in message.parts:
                if part.type == "text":
                    parts.append({"type": "text", "text": part.text})
                else:
                    encoded = base64.b64encode(part.image_bytes).decode("ascii")
                    parts.append(
                        {
                            "type": "image_url",
                            "image_url": {"url": f"data:image/png;base64,{encoded}"},
                        }
                    )
            messages.append({"role": message.role, "content": parts})
        return messages

    def complete(self, request: ChatRequest) -> ChatExchange:
        import requests

        payload = {
            "model": request.model_id,
            "temperature": request.temperature,
            "messages": self._wire_messages(request),
        }
        started = time.monotonic()
        last_error = "no attempt made"
        for attempt in range(1, self.max_attempts + 1):
            try:
                resp = self._session.post(
                    f"{self.base_url}/chat/completions",
                    json=payload,
                    headers={"Authorization": f"Bearer {self.api_key}"},
                    timeout=120,
                )
            except requests.RequestException as exc:
                last_error = str(exc)
                if attempt < self.max_attempts:
                    self._sleep(BACKOFF_BASE_S * 2 ** (attempt - 1))
                continue
            if resp.status_code == 429:
                last_error = "rate limited"
                if attempt < self.max_attempts:
                    self._sleep(BACKOFF_BASE_S * 2 ** (attempt - 1))
                    continue
                raise RateLimited(f"still rate limited after {self.max_attempts} attempts")
            if resp.status_code >= 500:
                last_error = f"server error {resp.status_code}"
                if attempt < self.max_attempts:
                    self._sleep(BACKOFF_BASE_S * 2 ** (attempt - 1))
                continue
            if resp.status_code != 200:
                raise BackendUnreachable(
                    f"chat endpoint returned {resp.status_code}: {resp.text[:200]}"
                )
            body = resp.json()
            text = body["choices"][0]["message"]["content"]
            if isinstance(text, list):  # content-parts style reply
                text = "".join(p.get("text", "") for p in text)
            return ChatExchange(
                request=request,
                response_text=text,
                usage=body.get("usage", {}),
                latency_s=time.monotonic() - started,
                attempts=attempt,
            )
        raise BackendUnreachable(
            f"chat endpoint unreachable after {self.max_attempts} attempts: {last_error}"
        )


class ScriptedBackend:
    """In-memory ordered replies; optionally cycles when exhausted."""

    supports_images = True

    def __init__(self, responses: Sequence[str], cycle: bool = False):
        self._responses = list(responses)
        self._cycle = cycle
        self.calls = 0

    def complete(self, request: ChatRequest) -> ChatExchange:
        if not self._responses:
            raise BackendUnreachable("scripted backend has no responses left")
        index = self.calls if not self._cycle else self.calls % len(self._responses)
        if index >= len(self._responses):
            raise BackendUnreachable(
                f"scripted backend exhausted after {len(self._responses)} replies"
            )
        self.calls += 1
        return ChatExchange(request=request, response_text=self._responses[index], attempts=1)


class MockChatBackend:
    """Replay backend: a directory of <request-hash>.txt fixtures plus an
    optional scripted sequence file for ordered replies.

    The sequence file is JSON: {"responses": ["...", ...], "cycle": false}.
    Scripted replies are consumed first; hash fixtures answer anything else.
    """

    supports_images = True

    def __init__(self, fixtures_dir: Optional[Path] = None, script_path: Optional[Path] = None):
        self.fixtures_dir = Path(fixtures_dir) if fixtures_dir else None
        self._script: list[str] = []
        self._cycle = False
        self._consumed = 0
        if script_path:
            data = json.loads(Path(script_path).read_text(encoding="utf-8"))
            self._script = list(data.get("responses", []))
            self._cycle = bool(data.get("cycle", False))

    def complete(self, request: ChatRequest) -> ChatExchange:
        if self._script:
            if self._consumed < len(self._script):
                text = self._script[self._consumed]
                self._consumed += 1
                return ChatExchange(request=request, response_text=text, attempts=1)
            if self._cycle:
                text = self._script[self._consumed % len(self._script)]
                self._consumed += 1
                return ChatExchange(request=request, response_text=text, attempts=1)
        if self.fixtures_dir is not None:
            fixture = self.fixtures_dir / f"{request_hash(request)}.txt"
            if fixture.exists():
                return ChatExchange(
                    request=request, response_text=fixture.read_text(encoding="utf-8"), attempts=1
                )
        raise BackendUnreachable("mock backend has no fixture or scripted reply for this request")


def record_fixture(fixtures_dir: Path, request: ChatRequest, response_text: str) -> Path:
    """Helper for building fixture directories from captured traffic."""
    fixtures_dir = Path(fixtures_dir)
    fixtures_dir.mkdir(parents=True, exist_ok=True)
    path = fixtures_dir / f"{request_hash(request)}.txt"
    path.write_text(response_text, encoding="utf-8")
    return path
