"""Word-window chunking with overlap.

Text is whitespace-normalized before chunking so that the chunk sequence can
reconstruct the normalized document exactly: chunk 0 plus, for every later
chunk, its words after the first `overlap_words`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from ..errors import ScreenwrightError


class SourceKind(str, Enum):
    API_DOC = "api_doc"
    TUTORIAL_SUBTITLE = "tutorial_subtitle"


@dataclass(frozen=True)
class KnowledgeDoc:
    doc_id: str
    source_kind: SourceKind
    title: str
    text: str

    def __post_init__(self):
        if not self.doc_id:
            raise ValueError("doc_id must be non-empty")
        if not self.text.strip():
            raise ValueError(f"document '{self.doc_id}' has empty text")


@dataclass(frozen=True)
class Chunk:
    doc_id: str
    chunk_index: int
    text: str


_TIMESTAMP = re.compile(
    r"^\s*(\d+\s*$|\d{1,2}:\d{2}(:\d{2})?([.,]\d{1,3})?\s*-->.*$|WEBVTT.*$)", re.IGNORECASE
)


def strip_caption_markup(text: str) -> str:
    """Drop SRT/VTT cue indexes, timestamp lines and the WEBVTT header."""
    kept = [line for line in text.splitlines() if not _TIMESTAMP.match(line)]
    return "\n".join(kept)


def normalize_words(text: str) -> list[str]:
    return text.split()


def chunk_document(doc: KnowledgeDoc, chunk_words: int, overlap_words: int) -> list[Chunk]:
    """Split the doc into overlapping word windows covering the whole text."""
    if not (chunk_words > overlap_words >= 0):
        raise ScreenwrightError(
            f"need chunk_words > overlap_words >= 0, got {chunk_words}/{overlap_words}"
        )
    words = normalize_words(doc.text)
    stride = chunk_words - overlap_words
    chunks: list[Chunk] = []
    start = 0
    index = 0
    while True:
        window = words[start : start + chunk_words]
        chunks.append(Chunk(doc_id=doc.doc_id, chunk_index=index, text=" ".join(window)))
        index += 1
        start += stride
        # a further window must contribute words beyond the overlap it repeats
        if start + overlap_words >= len(words):
            break
    return chunks


def reconstruct_words(chunks: list[Chunk], overlap_words: int) -> list[str]:
    """Inverse of chunk_document at the word level, for the coverage check."""
    ordered = sorted(chunks, key=lambda c: c.chunk_index)
    words: list[str] = []
    for i, chunk in enumerate(ordered):
        chunk_words = chunk.text.split()
        words.extend(chunk_words if i == 0 else chunk_words[overlap_words:])
    return words
