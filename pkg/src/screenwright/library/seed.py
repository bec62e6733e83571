"""The seed function set every session library starts from.

Bodies live as one file per function under seed_fns/ so the on-disk layout of
published libraries mirrors how the seeds themselves are shipped.
"""

from __future__ import annotations

from importlib import resources

from .model import FunctionLibrary, LibraryFunction, Param, Provenance, params_from_body

SEED_NAMES = (
    "animate_camera",
    "assign_motion",
    "import_asset",
    "place_camera",
    "place_object",
    "render_keyframes",
    "rotate_to_face",
    "sample_armature",
    "scale_to_real_height",
    "set_lighting",
)

# Semantic types and units for seed parameters; anything unlisted stays "any".
_PARAM_META: dict[tuple[str, str], tuple[str, str | None]] = {
    ("import_asset", "path"): ("file_path", None),
    ("scale_to_real_height", "obj"): ("scene_object", None),
    ("scale_to_real_height", "target_height_meters"): ("length", "m"),
    ("rotate_to_face", "obj"): ("scene_object", None),
    ("rotate_to_face", "target_point"): ("point_xyz", "m"),
    ("place_object", "obj"): ("scene_object", None),
    ("place_object", "location"): ("point_xyz", "m"),
    ("assign_motion", "armature"): ("armature", None),
    ("assign_motion", "motion_clip"): ("motion_clip_id", None),
    ("assign_motion", "start_frame"): ("frame", "frame"),
    ("assign_motion", "end_frame"): ("frame", "frame"),
    ("assign_motion", "start_point"): ("point_xyz", "m"),
    ("assign_motion", "end_point"): ("point_xyz", "m"),
    ("set_lighting", "preset"): ("lighting_preset", None),
    ("place_camera", "location"): ("point_xyz", "m"),
    ("place_camera", "look_at"): ("point_xyz", "m"),
    ("place_camera", "fov_degrees"): ("angle", "deg"),
    ("animate_camera", "waypoints"): ("camera_waypoints", None),
    ("render_keyframes", "frame_list"): ("frame_list", "frame"),
    ("render_keyframes", "out_dir"): ("directory_path", None),
    ("sample_armature", "armature"): ("armature", None),
    ("sample_armature", "frame_list"): ("frame_list", "frame"),
}


def seed_body(name: str) -> str:
    return resources.files("screenwright.library.seed_fns").joinpath(f"{name}.py").read_text("utf-8")


def _seed_function(name: str) -> LibraryFunction:
    body = seed_body(name)
    base = LibraryFunction.from_body(body, provenance=Provenance.SEED)
    params = tuple(
        Param(
            name=p.name,
            semantic_type=_PARAM_META.get((name, p.name), ("any", None))[0],
            units=_PARAM_META.get((name, p.name), ("any", None))[1],
            default=p.default,
        )
        for p in params_from_body(body)
    )
    return LibraryFunction(
        name=base.name,
        params=params,
        body=base.body,
        docstring=base.docstring,
        version=1,
        provenance=Provenance.SEED,
    )


def seed_library() -> FunctionLibrary:
    """Fresh library containing every seed function at version 1."""
    functions = {name: _seed_function(name) for name in SEED_NAMES}
    return FunctionLibrary(functions=functions, library_version=1, parent_ref=None)
