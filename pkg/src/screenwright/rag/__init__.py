"""Retrieval-augmented prompting: chunking, embedding, top-k cosine retrieval."""

from .chunking import Chunk, KnowledgeDoc, SourceKind, chunk_document, reconstruct_words, strip_caption_markup
from .embedder import Embedder, HashingEmbedder, RemoteEmbedder
from .store import (
    CONTEXT_FOOTER,
    CONTEXT_HEADER,
    DEFAULT_CHUNK_WORDS,
    DEFAULT_OVERLAP_WORDS,
    DEFAULT_TOP_K,
    RagStore,
    RetrievalResult,
    ScoredChunk,
    augment,
    format_context,
    load_corpus_dir,
)

__all__ = [
    "Chunk",
    "CONTEXT_FOOTER",
    "CONTEXT_HEADER",
    "DEFAULT_CHUNK_WORDS",
    "DEFAULT_OVERLAP_WORDS",
    "DEFAULT_TOP_K",
    "Embedder",
    "HashingEmbedder",
    "KnowledgeDoc",
    "RagStore",
    "RemoteEmbedder",
    "RetrievalResult",
    "ScoredChunk",
    "SourceKind",
    "augment",
    "chunk_document",
    "format_context",
    "load_corpus_dir",
    "reconstruct_words",
    "strip_caption_markup",
]
