from .config import MetricConfig
from .emd import channel_hist, normalize_hist, wasserstein_1d
from .imageio import load_rgb, load_rgba, to_gray
from .mask import MarginVector, component_areas, content_aspect, margins, structural_mask, support_bbox
from .ocr import OcrBox, OcrSidecar
from .report import FIELDS, MetricReport, PairJob, evaluate_batch, evaluate_pair, read_manifest
from .scores import (
    area_ratio,
    area_ratio_similarity,
    content_aspect_similarity,
    contrast_ratio,
    contrast_similarity,
    geometry_score,
    local_contrast,
    local_contrast_similarity,
    margin_asymmetry,
    margin_symmetry,
    palette_similarity,
    polarity_consistency,
    polarity_gap,
    text_jaccard,
    vibrancy_similarity,
)
from .ssim import ssim, ssim_map

__all__ = [
    "FIELDS",
    "MarginVector",
    "MetricConfig",
    "MetricReport",
    "OcrBox",
    "OcrSidecar",
    "PairJob",
    "area_ratio",
    "area_ratio_similarity",
    "channel_hist",
    "component_areas",
    "content_aspect",
    "content_aspect_similarity",
    "contrast_ratio",
    "contrast_similarity",
    "evaluate_batch",
    "evaluate_pair",
    "geometry_score",
    "load_rgb",
    "load_rgba",
    "local_contrast",
    "local_contrast_similarity",
    "margin_asymmetry",
    "margin_symmetry",
    "margins",
    "normalize_hist",
    "palette_similarity",
    "polarity_consistency",
    "polarity_gap",
    "read_manifest",
    "ssim",
    "ssim_map",
    "structural_mask",
    "support_bbox",
    "text_jaccard",
    "to_gray",
    "vibrancy_similarity",
    "wasserstein_1d",
]
