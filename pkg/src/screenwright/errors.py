"""Exception taxonomy shared across the pipeline."""

from __future__ import annotations


class ScreenwrightError(Exception):
    """Base class for all typed errors raised by this package."""


class EmptyDescription(ScreenwrightError):
    """The video description is empty after trimming whitespace."""


class ConfigError(ScreenwrightError):
    """Configuration file missing, unparsable, or inconsistent."""


class BackendUnreachable(ScreenwrightError):
    """A chat or embedding backend could not be reached after bounded retries."""


class RateLimited(ScreenwrightError):
    """The backend kept rate-limiting past the retry budget."""


class ProtocolError(ScreenwrightError):
    """An agent's output never matched its structured-output contract."""


class ValidationError(ScreenwrightError):
    """A produced snippet still failed library validation after retries."""

    def __init__(self, message: str, unknown_calls: list[str] | None = None):
        super().__init__(message)
        self.unknown_calls = list(unknown_calls or [])


class TemplateError(ScreenwrightError):
    """A prompt template is missing or references an unknown placeholder."""


class DuplicateSubprocess(ScreenwrightError):
    """A sub-process kind was accumulated twice into one script."""


class NameConflict(ScreenwrightError):
    """Library Add targeted a name that already exists."""


class UnknownFunction(ScreenwrightError):
    """Library Replace/Remove targeted a name that does not exist."""


class BodyParseError(ScreenwrightError):
    """A function body is not a single well-formed function definition."""


class SourceParseError(ScreenwrightError):
    """Snippet source could not be scanned for calls."""


class EmbedderUnreachable(ScreenwrightError):
    """The remote embedding endpoint could not be reached."""


class EmptyStore(ScreenwrightError):
    """Retrieval was attempted against an empty knowledge store."""


class RenderError(ScreenwrightError):
    """The engine raised while executing a script; message carries engine output."""


class RenderTimeout(ScreenwrightError):
    """An engine invocation exceeded the configured wall-clock cap."""


class EnvironmentMissing(ScreenwrightError):
    """A real renderer was selected but its binary or harness files are absent."""


class ArtifactContractViolation(ScreenwrightError):
    """A rendered artifact does not match the sampling plan it was made from."""


class CorruptEventLog(ScreenwrightError):
    """The event log has a sequence gap and cannot be replayed."""

    def __init__(self, first_missing_sequence: int, path: str | None = None):
        self.first_missing_sequence = first_missing_sequence
        self.path = path
        where = f" in {path}" if path else ""
        super().__init__(f"event log corrupt{where}: first missing sequence {first_missing_sequence}")


class UnknownSession(ScreenwrightError):
    """No session directory exists for the given id."""


class ReplayMismatch(ScreenwrightError):
    """Replaying the event log did not reproduce the stored script."""

    def __init__(self, message: str, diff: str = ""):
        super().__init__(message)
        self.diff = diff
