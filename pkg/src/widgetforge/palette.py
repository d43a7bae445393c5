"""Dominant colours: sampled k-means, then full-resolution reassignment.

Clustering runs on the distinct colours of the sample weighted by their pixel
counts. That is the same objective (and the same k-means++ sampling law) as
clustering every pixel, at a fraction of the cost on flat-coloured widgets.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AllTransparent
from .metrics.imageio import load_rgba

ALPHA_THRESHOLD = 8
_CHUNK = 1 << 16


@dataclass(frozen=True)
class PaletteEntry:
    hex: str
    weight: float

    def to_json(self) -> dict:
        return {"hex": self.hex, "percent": round(100.0 * self.weight, 4)}


@dataclass(frozen=True)
class Palette:
    entries: tuple[PaletteEntry, ...]
    # weights of every non-empty cluster before truncation to n; sums to 1
    all_weights: tuple[float, ...]
    n_pixels: int

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self.entries]


def _sq_dists(points: np.ndarray, centers: np.ndarray) -> np.ndarray:
    """Squared Euclidean distances via |x|² − 2x·c + |c|², chunked to bound memory."""
    cc = (centers**2).sum(axis=1)
    out = np.empty((len(points), len(centers)))
    for s in range(0, len(points), _CHUNK):
        p = points[s : s + _CHUNK]
        out[s : s + _CHUNK] = (p**2).sum(axis=1)[:, None] - 2.0 * (p @ centers.T) + cc
    return np.maximum(out, 0.0, out=out)


def _plusplus(points: np.ndarray, weights: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    centers = [points[rng.choice(len(points), p=weights / weights.sum())]]
    d2 = _sq_dists(points, centers[0][None, :])[:, 0]
    while len(centers) < k:
        mass = weights * d2
        total = mass.sum()
        if total <= 0:  # every point already sits on a center
            break
        c = points[rng.choice(len(points), p=mass / total)]
        centers.append(c)
        d2 = np.minimum(d2, _sq_dists(points, c[None, :])[:, 0])
    return np.array(centers, dtype=np.float64)


def kmeans(
    points: np.ndarray,
    k: int,
    seed: int = 0,
    weights: np.ndarray | None = None,
    max_iter: int = 50,
    tol: float = 1e-4,
) -> np.ndarray:
    """Weighted Lloyd iterations from a k-means++ start.

    Returns at most ``k`` centroids; fewer when the data has fewer distinct
    points. Empty clusters are re-seeded at the point farthest from its centroid.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or len(pts) == 0:
        raise ValueError("points must be a non-empty M×D array")
    if k < 1:
        raise ValueError("k must be >= 1")
    w = np.ones(len(pts)) if weights is None else np.asarray(weights, dtype=np.float64)
    rng = np.random.default_rng(seed)
    centers = _plusplus(pts, w, k, rng)

    for _ in range(max_iter):
        d = _sq_dists(pts, centers)
        labels = d.argmin(axis=1)
        mass = np.bincount(labels, weights=w, minlength=len(centers))
        new = np.empty_like(centers)
        for j in range(pts.shape[1]):
            new[:, j] = np.bincount(labels, weights=w * pts[:, j], minlength=len(centers))
        nonempty = mass > 0
        new[nonempty] /= mass[nonempty, None]
        if not nonempty.all():
            own = d[np.arange(len(pts)), labels]
            for j in np.flatnonzero(~nonempty):
                far = int(own.argmax())
                new[j] = pts[far]
                own[far] = -1.0
        shift = np.sqrt(((new - centers) ** 2).sum(axis=1)).max()
        centers = new
        if shift <= tol:
            break
    return centers


def _unique(pixels: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    key = (pixels[:, 0].astype(np.int64) << 16) | (pixels[:, 1].astype(np.int64) << 8) | pixels[:, 2]
    uniq, counts = np.unique(key, return_counts=True)
    colors = np.stack([(uniq >> 16) & 255, (uniq >> 8) & 255, uniq & 255], axis=1).astype(np.float64)
    return colors, counts.astype(np.float64)


def to_hex(rgb) -> str:
    r, g, b = (int(v) for v in np.clip(np.rint(rgb), 0, 255))
    return f"#{r:02x}{g:02x}{b:02x}"


def extract_palette(
    image,
    k: int = 12,
    n: int = 8,
    cap: int = 1_000_000,
    seed: int = 7,
    alpha_threshold: int = ALPHA_THRESHOLD,
) -> Palette:
    if not k >= n >= 1:
        raise ValueError(f"need k >= n >= 1, got k={k}, n={n}")
    rgba = load_rgba(image)
    opaque = rgba[..., 3] >= alpha_threshold
    pixels = rgba[..., :3][opaque]
    if len(pixels) == 0:
        raise AllTransparent("image has no opaque pixels")
    if len(pixels) > cap:
        rng = np.random.default_rng(seed)
        sample = pixels[rng.choice(len(pixels), size=cap, replace=False)]
    else:
        sample = pixels

    colors, counts = _unique(sample)
    centers = kmeans(colors, k, seed=seed, weights=counts)

    # reassign every opaque pixel (via its distinct colour) to the nearest centroid
    all_colors, all_counts = _unique(pixels)
    labels = _sq_dists(all_colors, centers).argmin(axis=1)
    totals = np.bincount(labels, weights=all_counts, minlength=len(centers))
    keep = np.flatnonzero(totals > 0)
    hexes = [to_hex(centers[i]) for i in keep]
    fractions = totals[keep] / len(pixels)
    order = sorted(range(len(keep)), key=lambda i: (-totals[keep[i]], hexes[i]))
    entries = tuple(PaletteEntry(hexes[i], float(fractions[i])) for i in order[:n])
    return Palette(entries, tuple(float(fractions[i]) for i in order), int(len(pixels)))
