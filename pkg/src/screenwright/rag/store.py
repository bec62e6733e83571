"""Knowledge store: ingest documents, retrieve top-k chunks, format prompt context.

The index is an exact brute-force cosine scan over a normalized matrix; at the
corpus scale this artifact targets (hundreds of documents) anything fancier is
unjustified. Retrieval is read-only over a snapshot, so concurrent readers are
safe; ingestion is single-writer.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from ..errors import ConfigError, EmptyStore
from .chunking import Chunk, KnowledgeDoc, SourceKind, chunk_document, strip_caption_markup
from .embedder import Embedder, HashingEmbedder

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1

CONTEXT_HEADER = "=== retrieved context ==="
CONTEXT_FOOTER = "=== end retrieved context ==="

DEFAULT_CHUNK_WORDS = 200
DEFAULT_OVERLAP_WORDS = 50
DEFAULT_TOP_K = 5


@dataclass(frozen=True)
class ScoredChunk:
    chunk: Chunk
    score: float


@dataclass(frozen=True)
class RetrievalResult:
    items: tuple[ScoredChunk, ...]

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    @classmethod
    def empty(cls) -> "RetrievalResult":
        return cls(items=())


class RagStore:
    def __init__(self, embedder: Optional[Embedder] = None):
        self.embedder = embedder or HashingEmbedder()
        self._chunks: list[Chunk] = []
        self._matrix = np.zeros((0, self.embedder.dimension), dtype=np.float64)
        self._doc_ids: set[str] = set()

    def __len__(self) -> int:
        return len(self._chunks)

    @property
    def chunks(self) -> Sequence[Chunk]:
        return tuple(self._chunks)

    def ingest(
        self,
        doc: KnowledgeDoc,
        chunk_words: int = DEFAULT_CHUNK_WORDS,
        overlap_words: int = DEFAULT_OVERLAP_WORDS,
    ) -> int:
        """Chunk and embed one document; returns the number of chunks added."""
        if doc.doc_id in self._doc_ids:
            raise ConfigError(f"doc_id '{doc.doc_id}' already ingested")
        chunks = chunk_document(doc, chunk_words, overlap_words)
        vectors = np.stack([self.embedder.embed(c.text) for c in chunks])
        self._matrix = np.vstack([self._matrix, vectors]) if len(self._chunks) else vectors
        self._chunks.extend(chunks)
        self._doc_ids.add(doc.doc_id)
        return len(chunks)

    def retrieve(self, query: str, k: int) -> RetrievalResult:
        """Top-k chunks by cosine similarity; ties break on (doc_id, chunk_index)."""
        if k < 1:
            raise ValueError("k must be positive")
        if not self._chunks:
            raise EmptyStore("retrieve called on an empty knowledge store")
        scores = self._matrix @ self.embedder.embed(query)
        order = sorted(
            range(len(self._chunks)),
            key=lambda i: (-scores[i], self._chunks[i].doc_id, self._chunks[i].chunk_index),
        )
        top = order[: min(k, len(order))]
        return RetrievalResult(
            items=tuple(ScoredChunk(chunk=self._chunks[i], score=float(scores[i])) for i in top)
        )

    # persistence: one file, JSON lines up front, raw float64 matrix after

    def save(self, path: Path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        matrix_bytes = np.ascontiguousarray(self._matrix, dtype=np.float64).tobytes()
        header = {
            "schema_version": SCHEMA_VERSION,
            "dimension": self.embedder.dimension,
            "embedder": self.embedder.embedder_id,
            "chunk_count": len(self._chunks),
            "matrix_bytes": len(matrix_bytes),
        }
        with open(path, "wb") as fh:
            fh.write((json.dumps(header, sort_keys=True) + "\n").encode("utf-8"))
            for chunk in self._chunks:
                row = {"doc_id": chunk.doc_id, "chunk_index": chunk.chunk_index, "text": chunk.text}
                fh.write((json.dumps(row, sort_keys=True) + "\n").encode("utf-8"))
            fh.write(matrix_bytes)

    @classmethod
    def load(cls, path: Path, embedder: Optional[Embedder] = None) -> "RagStore":
        path = Path(path)
        with open(path, "rb") as fh:
            header = json.loads(fh.readline().decode("utf-8"))
            if header.get("schema_version") != SCHEMA_VERSION:
                raise ConfigError(f"unsupported index schema in {path}")
            store = cls(embedder or HashingEmbedder(dimension=header["dimension"]))
            if store.embedder.embedder_id != header["embedder"]:
                raise ConfigError(
                    f"index was built with embedder '{header['embedder']}', "
                    f"store configured with '{store.embedder.embedder_id}'"
                )
            for _ in range(header["chunk_count"]):
                row = json.loads(fh.readline().decode("utf-8"))
                store._chunks.append(
                    Chunk(doc_id=row["doc_id"], chunk_index=row["chunk_index"], text=row["text"])
                )
            matrix = np.frombuffer(fh.read(header["matrix_bytes"]), dtype=np.float64)
        store._matrix = matrix.reshape(header["chunk_count"], header["dimension"]).copy()
        store._doc_ids = {c.doc_id for c in store._chunks}
        return store


def format_context(result: RetrievalResult, budget_chars: int) -> str:
    """Delimited context section, truncated at chunk boundaries, never mid-chunk."""
    lines = [CONTEXT_HEADER]
    used = 0
    included = 0
    for item in result:
        if used + len(item.chunk.text) > budget_chars:
            break
        lines.append(f"[{item.chunk.doc_id}#{item.chunk.chunk_index}] {item.chunk.text}")
        used += len(item.chunk.text)
        included += 1
    if len(result) and included == 0:
        log.warning("context budget %d too small for the first retrieved chunk", budget_chars)
    lines.append(CONTEXT_FOOTER)
    return "\n".join(lines)


def augment(prompt: str, result: RetrievalResult, budget_chars: int) -> str:
    """Append the retrieved-context section to an already rendered prompt."""
    return prompt.rstrip("\n") + "\n\n" + format_context(result, budget_chars) + "\n"


def load_corpus_dir(corpus_dir: Path) -> list[KnowledgeDoc]:
    """Read a corpus directory: text/markdown/caption files plus an optional manifest.

    The manifest (manifest.json) assigns source_kind and title per file; files
    not listed fall back to extension-based inference (.srt/.vtt are subtitles).
    """
    corpus_dir = Path(corpus_dir)
    if not corpus_dir.is_dir():
        raise ConfigError(f"corpus directory not found: {corpus_dir}")
    assigned: dict[str, dict] = {}
    manifest_path = corpus_dir / "manifest.json"
    if manifest_path.exists():
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
        for entry in manifest.get("docs", []):
            assigned[entry["file"]] = entry
    docs = []
    for path in sorted(corpus_dir.iterdir()):
        if path.name == "manifest.json" or path.suffix.lower() not in (".txt", ".md", ".srt", ".vtt"):
            continue
        meta = assigned.get(path.name, {})
        inferred = (
            SourceKind.TUTORIAL_SUBTITLE
            if path.suffix.lower() in (".srt", ".vtt")
            else SourceKind.API_DOC
        )
        kind = SourceKind(meta["source_kind"]) if "source_kind" in meta else inferred
        text = path.read_text(encoding="utf-8")
        if kind is SourceKind.TUTORIAL_SUBTITLE:
            text = strip_caption_markup(text)
        docs.append(
            KnowledgeDoc(
                doc_id=path.stem,
                source_kind=kind,
                title=meta.get("title", path.stem),
                text=text,
            )
        )
    return docs
