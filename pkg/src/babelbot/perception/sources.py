"""Perception sources: the fixture-file loader and mask RLE codec.

Fixture frame format (JSON): ``{"intrinsics": {...}, "masks": [{"id",
"pixels_rle", "labels", "scores", "eta", "source_confidence"}], "depth":
{"encoding": "f32le", "data_b64": ...}}``. ``pixels_rle`` is a list of
horizontal runs ``"u,v,n"`` joined by ``;`` covering pixels (u..u+n-1, v).
"""

from __future__ import annotations

import base64
import json
from pathlib import Path
from typing import Protocol

import numpy as np

from babelbot.perception.types import CameraIntrinsics, MaskObservation, PerceptionFrame


class PerceptionSource(Protocol):
    """Anything that can deliver the current frame (renderer or fixtures)."""

    def frame(self) -> PerceptionFrame: ...


def encode_rle(pixels: np.ndarray) -> str:
    """Encode (u, v) pixels as semicolon-joined horizontal runs."""
    px = np.unique(np.asarray(pixels, dtype=int).reshape(-1, 2), axis=0)
    order = np.lexsort((px[:, 0], px[:, 1]))
    px = px[order]
    runs: list[str] = []
    start = prev = None
    row = None
    for u, v in px:
        if row == v and prev is not None and u == prev + 1:
            prev = u
        else:
            if start is not None:
                runs.append(f"{start[0]},{start[1]},{prev - start[0] + 1}")
            start, prev, row = (u, v), u, v
    if start is not None:
        runs.append(f"{start[0]},{start[1]},{prev - start[0] + 1}")
    return ";".join(runs)


def decode_rle(rle: str) -> np.ndarray:
    pixels: list[tuple[int, int]] = []
    for run in rle.split(";"):
        if not run:
            continue
        u, v, n = (int(part) for part in run.split(","))
        pixels.extend((u + i, v) for i in range(n))
    return np.asarray(pixels, dtype=int).reshape(-1, 2)


def frame_to_json(frame: PerceptionFrame) -> dict:
    intr = frame.intrinsics
    depth = np.asarray(frame.depth, dtype="<f4")
    return {
        "intrinsics": {
            "fx": intr.fx,
            "fy": intr.fy,
            "cx": intr.cx,
            "cy": intr.cy,
            "width": intr.width,
            "height": intr.height,
        },
        "masks": [
            {
                "id": int(m.id),
                "pixels_rle": encode_rle(m.pixels),
                "labels": list(m.labels),
                "scores": [float(s) for s in m.scores],
                "eta": [float(e) for e in m.eta],
                "source_confidence": float(m.source_confidence),
            }
            for m in frame.masks
        ],
        "depth": {
            "encoding": "f32le",
            "data_b64": base64.b64encode(depth.tobytes()).decode("ascii"),
        },
    }


def frame_from_json(data: dict) -> PerceptionFrame:
    intr = CameraIntrinsics(**data["intrinsics"])
    masks = tuple(
        MaskObservation(
            id=m["id"],
            pixels=decode_rle(m["pixels_rle"]),
            labels=tuple(m["labels"]),
            scores=np.asarray(m["scores"], dtype=float),
            eta=np.asarray(m["eta"], dtype=float),
            source_confidence=float(m.get("source_confidence", 1.0)),
        )
        for m in data["masks"]
    )
    depth_info = data["depth"]
    if depth_info.get("encoding") != "f32le":
        raise ValueError(f"unsupported depth encoding: {depth_info.get('encoding')}")
    raw = base64.b64decode(depth_info["data_b64"])
    depth = np.frombuffer(raw, dtype="<f4").reshape(intr.height, intr.width).astype(np.float32)
    return PerceptionFrame(intrinsics=intr, masks=masks, depth=depth)


class FixtureFrameSource:
    """Replays recorded frames from JSON files, in order, sticking on the last."""

    def __init__(self, paths: list[Path]):
        if not paths:
            raise ValueError("fixture source needs at least one frame file")
        self._frames = [
            frame_from_json(json.loads(Path(p).read_text(encoding="utf-8"))) for p in paths
        ]
        self._index = 0

    def frame(self) -> PerceptionFrame:
        frame = self._frames[min(self._index, len(self._frames) - 1)]
        self._index += 1
        return frame


class SyntheticMonocularDepth:
    """Stands in for an external monocular depth model: true depth with
    seeded multiplicative noise within +-10%."""

    def __init__(self, true_depth: np.ndarray, seed: int = 0, noise: float = 0.1):
        self._depth = np.asarray(true_depth, dtype=float)
        self._rng = np.random.default_rng(seed)
        self._noise = noise

    def depth_over(self, pixels: np.ndarray) -> np.ndarray:
        px = np.asarray(pixels, dtype=int).reshape(-1, 2)
        h, w = self._depth.shape
        inside = (px[:, 0] >= 0) & (px[:, 0] < w) & (px[:, 1] >= 0) & (px[:, 1] < h)
        px = px[inside]
        base = self._depth[px[:, 1], px[:, 0]]
        factors = 1.0 + self._rng.uniform(-self._noise, self._noise, size=base.shape)
        return base * factors
