"""Embedders behind one small contract: embed(text) -> unit vector.

Two implementations: a deterministic feature-hashing embedder for offline use
and tests, and a thin client for a hosted embeddings endpoint.
"""

from __future__ import annotations

import hashlib
import re
from typing import Protocol

import numpy as np

from ..errors import EmbedderUnreachable

_TOKEN = re.compile(r"[a-z0-9]+")


class Embedder(Protocol):
    dimension: int
    embedder_id: str

    def embed(self, text: str) -> np.ndarray: ...


class HashingEmbedder:
    """Signed feature hashing of word tokens into a fixed-dimension unit vector.

    Pure function of the text: the same string always embeds to the same
    vector, which makes retrieval reproducible with no network at all.
    """

    def __init__(self, dimension: int = 256):
        if dimension < 8:
            raise ValueError("dimension too small to be useful")
        self.dimension = dimension
        self.embedder_id = f"hashing-v1-d{dimension}"

    def embed(self, text: str) -> np.ndarray:
        vec = np.zeros(self.dimension, dtype=np.float64)
        for token in _TOKEN.findall(text.lower()):
            digest = hashlib.blake2b(token.encode("utf-8"), digest_size=9).digest()
            bucket = int.from_bytes(digest[:8], "big") % self.dimension
            sign = 1.0 if digest[8] & 1 else -1.0
            vec[bucket] += sign
        norm = np.linalg.norm(vec)
        if norm > 0:
            vec /= norm
        return vec


class RemoteEmbedder:
    """Client for an OpenAI-style /embeddings endpoint."""

    def __init__(self, base_url: str, api_key: str, model: str, dimension: int, session=None):
        import requests

        self.base_url = base_url.rstrip("/")
        self.api_key = api_key
        self.model = model
        self.dimension = dimension
        self.embedder_id = f"remote:{model}"
        self._session = session or requests.Session()

    def embed(self, text: str) -> np.ndarray:
        import requests

        try:
            resp = self._session.post(
                f"{self.base_url}/embeddings",
                json={"model": self.model, "input": text},
                headers={"Authorization": f"Bearer {self.api_key}"},
                timeout=60,
            )
        except requests.RequestException as exc:
            raise EmbedderUnreachable(f"embedding endpoint unreachable: {exc}") from exc
        if resp.status_code != 200:
            raise EmbedderUnreachable(
                f"embedding endpoint returned {resp.status_code}: {resp.text[:200]}"
            )
        data = resp.json()["data"][0]["embedding"]
        vec = np.asarray(data, dtype=np.float64)
        if vec.shape != (self.dimension,):
            raise EmbedderUnreachable(
                f"embedding dimension {vec.shape} does not match configured {self.dimension}"
            )
        norm = np.linalg.norm(vec)
        return vec / norm if norm > 0 else vec
