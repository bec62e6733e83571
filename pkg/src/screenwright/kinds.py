"""The five mise-en-scene sub-process kinds, in canonical execution order."""

from __future__ import annotations

from enum import Enum


class SubProcessKind(str, Enum):
    SCENE = "scene"
    CHARACTER = "character"
    MOTION = "motion"
    LIGHTING = "lighting"
    CINEMATOGRAPHY = "cinematography"

    @property
    def order_index(self) -> int:
        return KIND_ORDER.index(self)


KIND_ORDER: tuple[SubProcessKind, ...] = (
    SubProcessKind.SCENE,
    SubProcessKind.CHARACTER,
    SubProcessKind.MOTION,
    SubProcessKind.LIGHTING,
    SubProcessKind.CINEMATOGRAPHY,
)
