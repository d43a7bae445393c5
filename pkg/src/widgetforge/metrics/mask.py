"""Structural mask: edge support that ignores colour and texture."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import ndimage
from skimage.filters import threshold_otsu

from ..errors import EmptySupport

_DILATE = np.ones((3, 3), dtype=bool)


@dataclass(frozen=True)
class MarginVector:
    top: int
    bottom: int
    left: int
    right: int

    def as_array(self) -> np.ndarray:
        return np.array([self.top, self.bottom, self.left, self.right], dtype=np.float64)


def structural_mask(gray: np.ndarray, iterations: int = 2) -> np.ndarray:
    """Sobel magnitude, Otsu threshold, 3×3 dilation."""
    g = np.asarray(gray, dtype=np.float64)
    mag = np.hypot(ndimage.sobel(g, axis=0, mode="nearest"), ndimage.sobel(g, axis=1, mode="nearest"))
    if not np.any(mag > 0):
        return np.zeros(g.shape, dtype=bool)
    lo, hi = mag.min(), mag.max()
    thr = threshold_otsu(mag) if hi > lo else 0.0
    edges = mag > thr
    if iterations > 0 and edges.any():
        edges = ndimage.binary_dilation(edges, structure=_DILATE, iterations=iterations)
    return edges


def support_bbox(mask: np.ndarray) -> tuple[int, int, int, int]:
    """(y_min, y_max, x_min, x_max) of the on-pixels."""
    rows = np.flatnonzero(mask.any(axis=1))
    if rows.size == 0:
        raise EmptySupport("mask has no structural pixels")
    cols = np.flatnonzero(mask.any(axis=0))
    return int(rows[0]), int(rows[-1]), int(cols[0]), int(cols[-1])


def margins(mask: np.ndarray) -> MarginVector:
    h, w = mask.shape
    y0, y1, x0, x1 = support_bbox(mask)
    return MarginVector(top=y0, bottom=h - 1 - y1, left=x0, right=w - 1 - x1)


def content_aspect(mask: np.ndarray) -> float:
    y0, y1, x0, x1 = support_bbox(mask)
    return (x1 - x0 + 1) / (y1 - y0 + 1)


def component_areas(mask: np.ndarray, tiny_fraction: float = 0.0) -> np.ndarray:
    """Areas of 8-connected components, dropping those below tiny_fraction·H·W."""
    labels, n = ndimage.label(mask, structure=np.ones((3, 3), dtype=bool))
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    areas = np.bincount(labels.ravel(), minlength=n + 1)[1:]
    return areas[areas >= tiny_fraction * mask.size]
