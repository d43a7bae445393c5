"""Write the synthetic metric fixtures to disk with OCR sidecars and an eval manifest.

    python scripts/make_fixtures.py --out fixtures/
    widgetforge eval --manifest fixtures/identity.jsonl
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))
from fixtures import fixture_images  # noqa: E402


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="fixtures")
    ap.add_argument("-n", type=int, default=25)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    lines = []
    for name, img, ocr in fixture_images(args.n):
        img.save(out / f"{name}.png")
        boxes = [{"text": b.text, "bbox": list(b.bbox)} for b in ocr.boxes]
        (out / f"{name}.ocr.json").write_text(json.dumps({"boxes": boxes}, indent=2) + "\n")
        pair = {"gt": f"{name}.png", "gen": f"{name}.png", "ocr_gt": f"{name}.ocr.json", "ocr_gen": f"{name}.ocr.json"}
        lines.append(json.dumps(pair))
    (out / "identity.jsonl").write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} fixtures to {out}/")


if __name__ == "__main__":
    main()
