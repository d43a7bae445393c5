"""1-D Wasserstein-1 between histograms on a shared uniform grid."""

from __future__ import annotations

import numpy as np


def normalize_hist(h) -> np.ndarray:
    h = np.asarray(h, dtype=np.float64)
    if h.ndim != 1 or h.size == 0:
        raise ValueError("histogram must be a non-empty 1-D array")
    if np.any(h < 0) or not np.all(np.isfinite(h)):
        raise ValueError("histogram entries must be finite and non-negative")
    total = h.sum()
    if total <= 0:
        raise ValueError("histogram has zero mass")
    return h / total


def wasserstein_1d(p, q, bin_width: float = 1.0) -> float:
    """W1 = bin_width · Σ_k |P_k − Q_k| over prefix sums of the normalized masses."""
    p = normalize_hist(p)
    q = normalize_hist(q)
    if p.shape != q.shape:
        raise ValueError("histograms must have the same number of bins")
    return float(bin_width * np.abs(np.cumsum(p - q)[:-1]).sum())


def channel_hist(values: np.ndarray, bins: int) -> np.ndarray:
    """Normalized histogram of values in [0, 1] over ``bins`` equal bins."""
    idx = np.minimum((np.asarray(values, dtype=np.float64).ravel() * bins).astype(np.int64), bins - 1)
    counts = np.bincount(np.clip(idx, 0, bins - 1), minlength=bins).astype(np.float64)
    return counts / counts.sum()
