"""Deterministic synthetic widget screenshots for metric tests."""

import numpy as np
from PIL import Image, ImageDraw

from widgetforge.metrics import OcrSidecar

SIZES = [(160, 160), (320, 160), (160, 320), (338, 158), (240, 240), (96, 96), (512, 256), (1024, 1024)]
BGS = [(255, 255, 255), (28, 28, 30), (242, 242, 247), (0, 122, 255), (52, 199, 89)]


def _widget(seed: int, size: tuple[int, int]):
    rng = np.random.default_rng(seed)
    w, h = size
    bg = BGS[seed % len(BGS)]
    fg = (255, 255, 255) if sum(bg) < 400 else (28, 28, 30)
    img = Image.new("RGBA", size, bg + (255,))
    d = ImageDraw.Draw(img)
    boxes = []
    for k in range(int(rng.integers(2, 6))):
        x0, y0 = int(rng.integers(4, w // 2)), int(rng.integers(4, h // 2))
        x1, y1 = min(w - 4, x0 + int(rng.integers(12, w // 2))), min(h - 4, y0 + int(rng.integers(10, h // 2)))
        colour = tuple(int(c) for c in rng.integers(0, 256, 3))
        shape = k % 3
        if shape == 0:
            d.rounded_rectangle((x0, y0, x1, y1), radius=6, fill=colour)
        elif shape == 1:
            d.ellipse((x0, y0, x1, y1), outline=colour, width=3)
        else:
            d.text((x0, y0), f"Item {k}", fill=fg)
            boxes.append({"text": f"Item {k}", "bbox": [x0, y0, x0 + 40, y0 + 12]})
    # a bar chart strip along the bottom
    n = int(rng.integers(3, 8))
    for i, v in enumerate(rng.random(n)):
        bx = 8 + i * (w - 16) // n
        d.rectangle((bx, h - 8 - int(v * h / 4), bx + max((w - 16) // n - 4, 1), h - 8), fill=(255, 149, 0))
    return img, OcrSidecar.from_obj(boxes)


def fixture_images(n: int = 25):
    """``n`` (name, image, sidecar) triples: drawn widgets plus a few odd formats."""
    out = []
    for i in range(n):
        size = SIZES[i % len(SIZES)]
        img, ocr = _widget(i, size)
        kind = i % 5
        if kind == 3:
            img = img.convert("L")
        elif kind == 4:
            a = np.asarray(img).copy()
            a[..., 3] = np.linspace(80, 255, a.shape[1], dtype=np.uint8)[None, :]
            img = Image.fromarray(a, "RGBA")
        else:
            img = img.convert("RGB")
        out.append((f"widget_{i:02d}_{size[0]}x{size[1]}", img, ocr))
    return out
