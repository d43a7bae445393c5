"""SSIM with an 11×11 Gaussian window (σ = 1.5), valid windows only."""

from __future__ import annotations

import numpy as np
from scipy import ndimage

WIN = 11
SIGMA = 1.5
K1, K2 = 0.01, 0.03


def gaussian_taps(size: int = WIN, sigma: float = SIGMA) -> np.ndarray:
    x = np.arange(size, dtype=np.float64) - (size - 1) / 2
    g = np.exp(-(x**2) / (2 * sigma**2))
    return g / g.sum()


def window_size(shape: tuple[int, int]) -> int:
    """11, or the largest odd size that fits a smaller image."""
    side = min(WIN, *shape)
    return side if side % 2 == 1 else side - 1


def _filter(img: np.ndarray, taps: np.ndarray) -> np.ndarray:
    r = len(taps) // 2
    out = ndimage.correlate1d(img, taps, axis=0, mode="constant")[r : img.shape[0] - r]
    out = ndimage.correlate1d(out, taps, axis=1, mode="constant")
    return out[:, r : img.shape[1] - r]


def ssim_map(x: np.ndarray, y: np.ndarray, data_range: float = 1.0) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise ValueError(f"shape mismatch {x.shape} vs {y.shape}")
    taps = gaussian_taps(window_size(x.shape))
    c1 = (K1 * data_range) ** 2
    c2 = (K2 * data_range) ** 2
    mx, my = _filter(x, taps), _filter(y, taps)
    vx = _filter(x * x, taps) - mx * mx
    vy = _filter(y * y, taps) - my * my
    cov = _filter(x * y, taps) - mx * my
    num = (2 * mx * my + c1) * (2 * cov + c2)
    den = (mx * mx + my * my + c1) * (vx + vy + c2)
    return num / den


def ssim(x: np.ndarray, y: np.ndarray, data_range: float = 1.0) -> float:
    return float(ssim_map(x, y, data_range).mean())
