"""screenwright: LLM/VLM agents that write and refine 3D-engine scripts from a video description."""

__version__ = "0.1.0"
