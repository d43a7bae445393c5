from __future__ import annotations

import os

import numpy as np
from PIL import Image, UnidentifiedImageError

from ..errors import UndecodableImage

# Rec. 709 luma weights on encoded values (same as skimage.color.rgb2gray)
LUMA = np.array([0.2125, 0.7154, 0.0721])


def load_rgba(source) -> np.ndarray:
    """uint8 H×W×4 from a path, PIL image or array (gray, RGB or RGBA)."""
    if isinstance(source, np.ndarray):
        arr = source
        if arr.dtype != np.uint8:
            arr = np.clip(np.rint(arr * 255.0 if arr.dtype.kind == "f" else arr), 0, 255).astype(np.uint8)
        if arr.ndim == 2:
            arr = np.stack([arr] * 3, axis=-1)
        if arr.ndim != 3 or arr.shape[2] not in (3, 4) or arr.shape[0] == 0 or arr.shape[1] == 0:
            raise UndecodableImage(f"unsupported array shape {source.shape}")
        if arr.shape[2] == 3:
            arr = np.concatenate([arr, np.full(arr.shape[:2] + (1,), 255, np.uint8)], axis=-1)
        return np.ascontiguousarray(arr)
    try:
        img = source if isinstance(source, Image.Image) else Image.open(os.fspath(source))
        img.load()
    except (OSError, UnidentifiedImageError, ValueError) as exc:
        raise UndecodableImage(f"cannot decode {source!r}: {exc}") from exc
    return np.asarray(img.convert("RGBA"))


def load_rgb(source) -> np.ndarray:
    """float64 H×W×3 in [0, 1], alpha composited over white."""
    rgba = load_rgba(source)
    rgb = rgba[..., :3].astype(np.float64) / 255.0
    if np.all(rgba[..., 3] == 255):
        return rgb
    a = rgba[..., 3:4].astype(np.float64) / 255.0
    return rgb * a + (1.0 - a)


def to_gray(rgb: np.ndarray) -> np.ndarray:
    return rgb @ LUMA


def resize_gray(gray: np.ndarray, shape: tuple[int, int]) -> np.ndarray:
    if gray.shape == tuple(shape):
        return gray
    img = Image.fromarray(gray.astype(np.float32), mode="F")
    out = img.resize((shape[1], shape[0]), Image.BILINEAR)
    return np.asarray(out, dtype=np.float64)
