"""OCR sidecars: detections produced elsewhere and passed in as JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class OcrBox:
    text: str
    bbox: tuple[float, float, float, float]  # x1, y1, x2, y2 in px
    confidence: float = 1.0


@dataclass(frozen=True)
class OcrSidecar:
    boxes: tuple[OcrBox, ...] = ()

    def words(self) -> set[str]:
        return {w.lower() for b in self.boxes for w in b.text.split()}

    @classmethod
    def from_obj(cls, obj) -> "OcrSidecar":
        items = obj.get("boxes", obj.get("words", [])) if isinstance(obj, dict) else obj
        boxes = []
        for i, item in enumerate(items):
            x1, y1, x2, y2 = (float(v) for v in item["bbox"])
            if not (x1 < x2 and y1 < y2):
                raise ValueError(f"ocr box {i}: degenerate bbox {item['bbox']}")
            boxes.append(OcrBox(str(item["text"]), (x1, y1, x2, y2), float(item.get("confidence", 1.0))))
        return cls(tuple(boxes))

    @classmethod
    def load(cls, path) -> "OcrSidecar":
        return cls.from_obj(json.loads(Path(path).read_text("utf-8")))
