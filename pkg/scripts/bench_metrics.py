"""Time the full metric suite on a widget-like pair at a given resolution."""

import argparse
import time

import numpy as np

from widgetforge.metrics import OcrSidecar, evaluate_pair


def synthetic_pair(size: int, seed: int):
    rng = np.random.default_rng(seed)
    gt = np.full((size, size, 3), 242, np.uint8)
    for _ in range(12):
        r, c = rng.integers(0, size - size // 8, 2)
        gt[r : r + size // 10, c : c + size // 6] = rng.integers(0, 256, 3)
    gen = np.roll(gt, (size // 64, size // 48), axis=(0, 1))
    return gt, gen


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=1024)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    gt, gen = synthetic_pair(args.size, args.seed)
    ocr = OcrSidecar.from_obj([{"text": "Steps 8421", "bbox": [10, 10, 120, 30]}])
    times = []
    for _ in range(args.repeat):
        t0 = time.perf_counter()
        report = evaluate_pair(gt, gen, ocr, ocr)
        times.append(time.perf_counter() - t0)
    print(f"{args.size}x{args.size}: best {min(times):.3f}s  median {np.median(times):.3f}s over {args.repeat} runs")
    for k, v in report.scores.items():
        print(f"  {k:<9} {v if v is None else round(v, 4)}")


if __name__ == "__main__":
    main()
