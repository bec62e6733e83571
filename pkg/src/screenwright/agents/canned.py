"""Deterministic rule-based backends for fully offline runs (--mock-all).

Each backend synthesizes a plausible, always-valid reply for its role, so a
whole session can run end to end with no network and no fixtures on disk.
"""

from __future__ import annotations

import json
import re

from ..kinds import SubProcessKind
from .types import ChatExchange, ChatRequest

CANNED_SNIPPETS: dict[SubProcessKind, str] = {
    SubProcessKind.SCENE: (
        'ground = import_asset("demo_ground")\n'
        "place_object(ground, (0.0, 0.0, 0.0))\n"
        "scale_to_real_height(ground, 0.3)\n"
    ),
    SubProcessKind.CHARACTER: (
        'hero = import_asset("demo_hero")\n'
        "scale_to_real_height(hero, 1.8)\n"
        "place_object(hero, (0.0, -2.0, 0.0))\n"
        "rotate_to_face(hero, (0.0, 5.0, 0.0))\n"
    ),
    SubProcessKind.MOTION: (
        'assign_motion(hero, "run", 1, 96, (0.0, -2.0, 0.0), (0.0, 6.0, 0.0))\n'
    ),
    SubProcessKind.LIGHTING: 'set_lighting("sun")\n',
    SubProcessKind.CINEMATOGRAPHY: (
        "place_camera((6.0, -6.0, 3.0), (0.0, 0.0, 1.0), 50.0)\n"
        "animate_camera([\n"
        '    {"frame": 1, "location": (6.0, -6.0, 3.0), "look_at": (0.0, 0.0, 1.0)},\n'
        '    {"frame": 96, "location": (0.0, -8.0, 2.0), "look_at": (0.0, 0.0, 1.0)},\n'
        "])\n"
    ),
}

CANNED_GUIDANCE: dict[SubProcessKind, str] = {
    SubProcessKind.SCENE: "Place a flat grassy ground plane centered at the origin, about 20 m across.",
    SubProcessKind.CHARACTER: "Import the main character, scale it to 1.8 m tall, start it 2 m behind the origin facing forward.",
    SubProcessKind.MOTION: "Run forward 8 m along +Y between frames 1 and 96 at a steady pace.",
    SubProcessKind.LIGHTING: "Bright midday sun, warm white, soft shadows.",
    SubProcessKind.CINEMATOGRAPHY: "Start on a three-quarter view 6 m out, 50 degree FOV, slowly track toward a low front view.",
}


def _prompt_text(request: ChatRequest) -> str:
    return "\n".join(p.text for m in request.messages for p in m.parts if p.type == "text")


def _kind_from_prompt(text: str) -> SubProcessKind:
    match = re.search(r"^Sub-process:\s*(\w+)\s*$", text, re.MULTILINE)
    if match:
        try:
            return SubProcessKind(match.group(1).strip().lower())
        except ValueError:
            pass
    return SubProcessKind.SCENE


class CannedDirectorBackend:
    supports_images = False

    def __init__(self):
        self.calls = 0

    def complete(self, request: ChatRequest) -> ChatExchange:
        self.calls += 1
        items = []
        for kind, guidance in CANNED_GUIDANCE.items():
            entry = {"kind": kind.value, "guidance": guidance}
            if kind is SubProcessKind.MOTION:
                entry["motions"] = ["run"]
            items.append(entry)
        body = json.dumps({"subprocesses": items}, indent=2)
        return ChatExchange(request=request, response_text=f"Here is the breakdown.\n{body}\n")


class CannedProgrammerBackend:
    supports_images = False

    def __init__(self):
        self.calls = 0

    def complete(self, request: ChatRequest) -> ChatExchange:
        self.calls += 1
        text = _prompt_text(request)
        if "Decide ONE mutation" in text:
            reply = (
                '{"action": "add", "name": "chain_motions", "reason": "sequence multiple clips"}\n\n'
                "```python\n"
                "def chain_motions(armature, motion_specs):\n"
                '    """Play motion clips back to back, each spec a dict of assign_motion arguments."""\n'
                "    for spec in motion_specs:\n"
                '        assign_motion(armature, spec["motion_clip"], spec["start_frame"],\n'
                '                      spec["end_frame"], spec["start_point"], spec["end_point"])\n'
                "```\n"
            )
            return ChatExchange(request=request, response_text=reply)
        kind = _kind_from_prompt(text)
        snippet = CANNED_SNIPPETS[kind]
        reply = f"```python\n{snippet}```\n\n{{\"capability_gap\": false, \"notes\": \"\"}}\n"
        return ChatExchange(request=request, response_text=reply)


class CannedReviewerBackend:
    supports_images = True

    def __init__(self):
        self.calls = 0

    def complete(self, request: ChatRequest) -> ChatExchange:
        self.calls += 1
        body = json.dumps(
            {
                "verdict": "Pass",
                "answers": [
                    {
                        "question": "Does the render match the directive?",
                        "answer": "Yes, the framing and content line up.",
                        "ok": True,
                    }
                ],
                "suggestions": [],
                "target_hint": None,
            },
            indent=2,
        )
        return ChatExchange(request=request, response_text=body)
