"""Full metric suite on one (ground truth, generated) pair, plus batches."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from ..errors import EmptySupport
from .config import MetricConfig
from .imageio import load_rgb, resize_gray, to_gray
from .mask import margins, structural_mask
from .ocr import OcrSidecar
from .scores import (
    area_ratio_similarity,
    contrast_similarity,
    content_aspect_similarity,
    geometry_score,
    hsv,
    local_contrast_similarity,
    margin_symmetry,
    palette_similarity,
    polarity_consistency,
    text_jaccard,
    vibrancy_similarity,
)
from .ssim import ssim

FIELDS = ("margin", "content", "area", "text", "contrast", "loccon", "palette", "vibrancy", "polarity", "ssim", "geometry")


@dataclass
class MetricReport:
    scores: dict[str, float | None]
    reasons: dict[str, str] = field(default_factory=dict)
    config: dict = field(default_factory=dict)

    def __getattr__(self, name):
        if name in FIELDS:
            return self.scores.get(name)
        raise AttributeError(name)

    def to_json(self) -> dict:
        out = {k: self.scores.get(k) for k in FIELDS}
        if self.reasons:
            out["null_reasons"] = dict(self.reasons)
        out["config"] = self.config
        return out


@dataclass
class _Side:
    rgb: np.ndarray
    gray: np.ndarray
    mask: np.ndarray
    hsv: np.ndarray

    @classmethod
    def of(cls, image) -> "_Side":
        rgb = load_rgb(image)
        gray = to_gray(rgb)
        return cls(rgb, gray, structural_mask(gray), hsv(rgb))


def _guard(scores, reasons, name: str, fn: Callable[[], float]) -> None:
    try:
        scores[name] = float(fn())
    except EmptySupport as exc:
        scores[name] = None
        reasons[name] = f"empty structural support: {exc}"


def evaluate_pair(
    img_gt,
    img_gen,
    ocr_gt: OcrSidecar | None = None,
    ocr_gen: OcrSidecar | None = None,
    cfg: MetricConfig | None = None,
) -> MetricReport:
    """All metrics for one pair. Metric-level failures become nulls with a reason."""
    cfg = cfg or MetricConfig()
    a, b = _Side.of(img_gt), _Side.of(img_gen)
    scores: dict[str, float | None] = {}
    reasons: dict[str, str] = {}

    _guard(scores, reasons, "margin", lambda: margin_symmetry(margins(a.mask), margins(b.mask), cfg))
    _guard(scores, reasons, "content", lambda: content_aspect_similarity(a.mask, b.mask, cfg))
    _guard(scores, reasons, "area", lambda: area_ratio_similarity(a.mask, b.mask, cfg))
    if ocr_gt is None or ocr_gen is None:
        scores["text"] = scores["loccon"] = None
        reasons["text"] = reasons["loccon"] = "ocr sidecar not supplied"
    else:
        scores["text"] = text_jaccard(ocr_gt, ocr_gen)
        scores["loccon"] = local_contrast_similarity(a.gray, ocr_gt, b.gray, ocr_gen, cfg)
    scores["contrast"] = contrast_similarity(a.gray, b.gray, cfg)
    scores["palette"] = palette_similarity(a.hsv, b.hsv, cfg)
    scores["vibrancy"] = vibrancy_similarity(a.hsv, b.hsv, cfg)
    scores["polarity"] = polarity_consistency(a.gray, b.gray, cfg)
    scores["ssim"] = ssim(a.gray, resize_gray(b.gray, a.gray.shape))
    h_gt, w_gt = a.gray.shape
    h_gen, w_gen = b.gray.shape
    scores["geometry"] = geometry_score((w_gt, h_gt), (w_gen, h_gen), cfg)
    return MetricReport({k: scores[k] for k in FIELDS}, reasons, cfg.to_json())


@dataclass(frozen=True)
class PairJob:
    gt: str
    gen: str
    ocr_gt: str | None = None
    ocr_gen: str | None = None

    @classmethod
    def from_obj(cls, obj: dict, base: Path | None = None) -> "PairJob":
        def resolve(p):
            if p is None:
                return None
            path = Path(p)
            return str(path if path.is_absolute() or base is None else base / path)

        return cls(resolve(obj["gt"]), resolve(obj["gen"]), resolve(obj.get("ocr_gt")), resolve(obj.get("ocr_gen")))


def _run_job(args: tuple[PairJob, MetricConfig]) -> dict:
    job, cfg = args
    try:
        ocr_gt = OcrSidecar.load(job.ocr_gt) if job.ocr_gt else None
        ocr_gen = OcrSidecar.load(job.ocr_gen) if job.ocr_gen else None
        report = evaluate_pair(job.gt, job.gen, ocr_gt, ocr_gen, cfg)
        return {"gt": job.gt, "gen": job.gen, "ok": True, **report.to_json()}
    except Exception as exc:  # one bad pair must not abort the batch
        return {"gt": job.gt, "gen": job.gen, "ok": False, "error": f"{type(exc).__name__}: {exc}"}


def evaluate_batch(jobs: list[PairJob], cfg: MetricConfig | None = None, workers: int = 1) -> list[dict]:
    """Results in input order regardless of completion order."""
    cfg = cfg or MetricConfig()
    args = [(job, cfg) for job in jobs]
    if workers <= 1 or len(jobs) <= 1:
        return [_run_job(a) for a in args]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_job, args))


def read_manifest(path) -> list[PairJob]:
    """JSON list or JSONL of {gt, gen, ocr_gt?, ocr_gen?}; paths relative to the manifest."""
    path = Path(path)
    text = path.read_text("utf-8").strip()
    if text.startswith("["):
        items = json.loads(text)
    else:
        items = [json.loads(line) for line in text.splitlines() if line.strip()]
    return [PairJob.from_obj(item, path.parent) for item in items]
