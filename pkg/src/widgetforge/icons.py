"""Two-stage icon retrieval over precomputed embeddings.

Stage 1 keeps the K records with the highest visual cosine to the query;
stage 2 re-ranks those by textual cosine and returns the top ``final``.
Ties break by ascending id so search is a pure function.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import DimensionMismatch, DuplicateId, EmptyIndex

DEFAULT_K = 50
DEFAULT_FINAL = 5


def l2_normalize(v) -> np.ndarray:
    v = np.asarray(v, dtype=np.float64)
    norm = np.linalg.norm(v)
    if not np.isfinite(norm) or norm == 0:
        raise ValueError("cannot normalize a zero or non-finite vector")
    return v / norm


@dataclass(frozen=True)
class IconRecord:
    id: str
    svg_path: str
    caption: str
    vis_embed: np.ndarray
    txt_embed: np.ndarray

    @classmethod
    def from_obj(cls, obj: dict) -> "IconRecord":
        return cls(
            id=str(obj["id"]),
            svg_path=str(obj.get("svg_path", "")),
            caption=str(obj.get("caption", "")),
            vis_embed=l2_normalize(obj["vis_embed"]),
            txt_embed=l2_normalize(obj["txt_embed"]),
        )


@dataclass(frozen=True)
class DetectedElement:
    """A detected component: crop reference, bbox, description and category label."""

    region: str
    bbox: tuple[float, float, float, float]
    description: str
    category: str


@dataclass(frozen=True)
class IconQuery:
    vis_embed: np.ndarray
    txt_embed: np.ndarray

    @classmethod
    def from_obj(cls, obj: dict) -> "IconQuery":
        return cls(l2_normalize(obj["vis_embed"]), l2_normalize(obj["txt_embed"]))

    @classmethod
    def load(cls, path) -> "IconQuery":
        return cls.from_obj(json.loads(Path(path).read_text("utf-8")))


@dataclass(frozen=True)
class SearchHit:
    id: str
    visual: float
    textual: float

    def to_json(self) -> dict:
        return {"id": self.id, "visual": self.visual, "textual": self.textual}


class IconIndex:
    """Immutable store; embedding matrices are read-only."""

    def __init__(self, records: Iterable[IconRecord]):
        records = list(records)
        seen: set[str] = set()
        for r in records:
            if r.id in seen:
                raise DuplicateId(f"duplicate icon id {r.id!r}")
            seen.add(r.id)
        if records:
            dv, dt = records[0].vis_embed.shape, records[0].txt_embed.shape
            for r in records:
                if r.vis_embed.shape != dv or r.txt_embed.shape != dt:
                    raise DimensionMismatch(
                        f"record {r.id!r}: dims {r.vis_embed.shape}/{r.txt_embed.shape}, index has {dv}/{dt}"
                    )
        self.records = tuple(records)
        self.ids = np.array([r.id for r in records], dtype=object)
        # rank of each record's id in ascending order, used as a sort key for ties
        self._id_rank = np.empty(len(records), dtype=np.int64)
        self._id_rank[np.argsort(self.ids.astype(str), kind="stable")] = np.arange(len(records))
        self.vis = np.array([r.vis_embed for r in records], dtype=np.float64)
        self.txt = np.array([r.txt_embed for r in records], dtype=np.float64)
        self.vis.setflags(write=False)
        self.txt.setflags(write=False)

    def __len__(self) -> int:
        return len(self.records)

    def search(self, query: IconQuery, k: int = DEFAULT_K, final: int = DEFAULT_FINAL) -> list[SearchHit]:
        if not self.records:
            raise EmptyIndex("index is empty")
        if query.vis_embed.shape[0] != self.vis.shape[1] or query.txt_embed.shape[0] != self.txt.shape[1]:
            raise DimensionMismatch("query dims do not match the index")
        if k < 1 or final < 1:
            raise ValueError("k and final must be >= 1")
        s_v = self.vis @ query.vis_embed
        coarse = np.lexsort((self._id_rank, -s_v))[:k]
        s_t = self.txt[coarse] @ query.txt_embed
        fine = coarse[np.lexsort((self._id_rank[coarse], -s_t))][:final]
        by_pos = {int(i): float(t) for i, t in zip(coarse, s_t)}
        return [SearchHit(str(self.ids[i]), float(s_v[i]), by_pos[int(i)]) for i in fine]


def build_index(lines: Iterable[str | dict]) -> IconIndex:
    """Index from JSONL lines (or already-parsed dicts); blank lines skipped."""
    records = []
    for line in lines:
        if isinstance(line, str):
            if not line.strip():
                continue
            line = json.loads(line)
        records.append(IconRecord.from_obj(line))
    return IconIndex(records)


def load_index(path) -> IconIndex:
    with open(path, encoding="utf-8") as fh:
        return build_index(fh)


def search(index: IconIndex, query: IconQuery, k: int = DEFAULT_K, final: int = DEFAULT_FINAL) -> list[str]:
    return [hit.id for hit in index.search(query, k, final)]
