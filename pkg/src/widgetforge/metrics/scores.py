"""Per-metric similarity scores in [0, 100] (SSIM in [-1, 1])."""

from __future__ import annotations

import math

import numpy as np

from ..errors import EmptySupport
from .config import MetricConfig
from .emd import channel_hist, wasserstein_1d
from .mask import MarginVector, component_areas, content_aspect
from .ocr import OcrSidecar

DEFAULT = MetricConfig()


def to_similarity(diff: float, scale: float) -> float:
    return 100.0 * math.exp(-diff / scale)


def margin_asymmetry(m_gt: MarginVector, m_gen: MarginVector) -> float:
    dm = np.abs(m_gt.as_array() - m_gen.as_array())
    mu = dm.mean()
    return 0.0 if mu < 1e-6 else float(dm.std() / mu)


def margin_symmetry(m_gt: MarginVector, m_gen: MarginVector, cfg: MetricConfig = DEFAULT) -> float:
    return to_similarity(margin_asymmetry(m_gt, m_gen), cfg.s_margin)


def content_aspect_similarity(mask_gt, mask_gen, cfg: MetricConfig = DEFAULT) -> float:
    diff = abs(math.log(content_aspect(mask_gt) / content_aspect(mask_gen)))
    return to_similarity(diff, cfg.s_content)


def area_ratio(mask: np.ndarray, cfg: MetricConfig = DEFAULT) -> float:
    areas = component_areas(mask, cfg.tiny_region)
    if areas.size == 0:
        raise EmptySupport("no connected component above the tiny-region threshold")
    return float(areas.mean() / areas.sum())


def area_ratio_similarity(mask_gt, mask_gen, cfg: MetricConfig = DEFAULT) -> float:
    return to_similarity(abs(area_ratio(mask_gt, cfg) - area_ratio(mask_gen, cfg)), cfg.s_area)


def text_jaccard(ocr_gt: OcrSidecar, ocr_gen: OcrSidecar) -> float:
    a, b = ocr_gt.words(), ocr_gen.words()
    if not a and not b:
        return 100.0
    return 100.0 * len(a & b) / len(a | b)


def contrast_ratio(gray: np.ndarray) -> float:
    lo, hi = np.percentile(gray, [5, 95])
    return float((hi + 0.05) / (lo + 0.05))


def contrast_similarity(gray_gt, gray_gen, cfg: MetricConfig = DEFAULT) -> float:
    return to_similarity(abs(contrast_ratio(gray_gt) - contrast_ratio(gray_gen)), cfg.s_contrast)


def local_contrast(gray: np.ndarray, ocr: OcrSidecar) -> float | None:
    """Mean contrast ratio over text boxes clipped to the image; None without boxes."""
    h, w = gray.shape
    ratios = []
    for box in ocr.boxes:
        x1, y1, x2, y2 = box.bbox
        c0, r0 = max(int(math.floor(x1)), 0), max(int(math.floor(y1)), 0)
        c1, r1 = min(int(math.ceil(x2)), w), min(int(math.ceil(y2)), h)
        if c1 > c0 and r1 > r0:
            ratios.append(contrast_ratio(gray[r0:r1, c0:c1]))
    return float(np.mean(ratios)) if ratios else None


def local_contrast_similarity(gray_gt, ocr_gt, gray_gen, ocr_gen, cfg: MetricConfig = DEFAULT) -> float:
    a, b = local_contrast(gray_gt, ocr_gt), local_contrast(gray_gen, ocr_gen)
    if a is None and b is None:
        return 100.0
    if a is None or b is None:
        return cfg.one_sided_text_penalty
    return to_similarity(abs(a - b), cfg.s_loccon)


def hsv(rgb: np.ndarray) -> np.ndarray:
    """Hue and saturation in [0, 1] (value channel left out: no metric reads it)."""
    r, g, b = rgb[..., 0], rgb[..., 1], rgb[..., 2]
    mx = np.maximum(np.maximum(r, g), b)
    delta = mx - np.minimum(np.minimum(r, g), b)
    safe = np.where(delta > 0, delta, 1.0)
    hue = np.where(mx == r, (g - b) / safe, np.where(mx == g, 2.0 + (b - r) / safe, 4.0 + (r - g) / safe))
    hue = np.where(delta > 0, (hue / 6.0) % 1.0, 0.0)
    sat = np.where(mx > 0, delta / np.where(mx > 0, mx, 1.0), 0.0)
    return np.stack([hue, sat], axis=-1)


def palette_similarity(hsv_gt, hsv_gen, cfg: MetricConfig = DEFAULT) -> float:
    """Linear W1 between hue histograms; hue normalized to [0, 1] so bins have width 1/B."""
    b = cfg.hue_bins
    w1 = wasserstein_1d(channel_hist(hsv_gt[..., 0], b), channel_hist(hsv_gen[..., 0], b), 1.0 / b)
    return to_similarity(w1, cfg.alpha)


def vibrancy_similarity(hsv_gt, hsv_gen, cfg: MetricConfig = DEFAULT) -> float:
    b = cfg.sat_bins
    w1 = wasserstein_1d(channel_hist(hsv_gt[..., 1], b), channel_hist(hsv_gen[..., 1], b), 1.0 / b)
    return to_similarity(w1, cfg.beta)


def polarity_gap(gray: np.ndarray) -> float:
    """median − mean of the darkest 10 % of pixels."""
    flat = gray.ravel()
    k = max(1, int(math.ceil(0.1 * flat.size)))
    darkest = np.partition(flat, k - 1)[:k]
    return float(np.median(flat) - darkest.mean())


def polarity_consistency(gray_gt, gray_gen, cfg: MetricConfig = DEFAULT) -> float:
    g_gt, g_gen = polarity_gap(gray_gt), polarity_gap(gray_gen)
    if np.sign(g_gt) != np.sign(g_gen):
        return 0.0
    return 100.0 * math.exp(-cfg.gamma * abs(g_gt - g_gen))


def geometry_score(dims_gt: tuple[float, float], dims_gen: tuple[float, float], cfg: MetricConfig = DEFAULT) -> float:
    (wt, ht), (wg, hg) = dims_gt, dims_gen
    if min(wt, ht, wg, hg) <= 0:
        raise ValueError("dimensions must be positive")
    d = abs(math.log((wg / hg) / (wt / ht))) + 0.5 * (abs(math.log(wg / wt)) + abs(math.log(hg / ht)))
    return to_similarity(d, cfg.s_geo)
