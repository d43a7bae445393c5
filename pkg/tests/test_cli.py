import json

import numpy as np
import pytest
from PIL import Image

from widgetforge.cli import main
from widgetforge.synth.engine import SEED_DIR

GOOD = SEED_DIR / "music.widget.json"


@pytest.fixture
def bad(tmp_path):
    p = tmp_path / "bad.widget.json"
    doc = json.loads(GOOD.read_text())
    doc["widget"]["root"]["padding"] = -4
    p.write_text(json.dumps(doc))
    return p


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_ok(capsys):
    code, out, _ = run(capsys, "validate", GOOD)
    assert code == 0 and json.loads(out)["ok"] is True


def test_validate_bad(capsys, bad):
    code, out, _ = run(capsys, "validate", bad)
    assert code == 1
    assert json.loads(out)["findings"][0]["code"] == "NEGATIVE_DIMENSION"


def test_validate_repair(capsys, bad, tmp_path):
    fixed = tmp_path / "fixed.json"
    code, out, _ = run(capsys, "validate", bad, "--repair", "-o", fixed)
    assert code == 0 and json.loads(out)["repaired_ok"]
    assert run(capsys, "validate", fixed)[0] == 0


def test_syntax_error_json(capsys, tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{"widget": {\n "padding": }')
    code, _, err = run(capsys, "validate", p, "--json-errors")
    info = json.loads(err)
    assert code == 1 and info["error"] == "DSLSyntaxError" and info["line"] == 2


def test_compile_html(capsys, tmp_path):
    out = tmp_path / "w.html"
    assert run(capsys, "compile", GOOD, "--target", "html", "-o", out)[0] == 0
    assert out.read_text().startswith('<html lang="en">')


def test_compile_react_stdout(capsys):
    code, out, _ = run(capsys, "compile", GOOD, "--target", "react")
    assert code == 0 and out.startswith('import React from "react";')


def test_fit_target(capsys):
    code, out, _ = run(capsys, "fit", GOOD, "--target", "320x160")
    res = json.loads(out)
    assert code == 0 and res["render_dims"] == [320, 160] and res["psi_star"] <= 0


def test_layout(capsys):
    code, out, _ = run(capsys, "layout", GOOD, "--size", "300x150")
    assert code == 0 and json.loads(out)["boxes"][0]["id"] == "shell"


def test_eval_identity(capsys, tmp_path):
    img = np.full((40, 60, 3), 240, np.uint8)
    img[10:30, 10:50] = (255, 59, 48)
    p = tmp_path / "a.png"
    Image.fromarray(img).save(p)
    code, out, _ = run(capsys, "eval", "--gt", p, "--gen", p)
    rep = json.loads(out)
    assert code == 0 and rep["ssim"] == 1.0
    assert all(rep[k] == pytest.approx(100) for k in ("margin", "content", "area", "contrast", "palette", "polarity", "geometry"))


def test_eval_usage(capsys):
    assert run(capsys, "eval", "--gt", "x.png")[0] == 2


def test_palette(capsys, tmp_path):
    p = tmp_path / "p.png"
    Image.fromarray(np.full((5, 5, 3), (255, 0, 0), np.uint8)).save(p)
    code, out, _ = run(capsys, "palette", p)
    assert code == 0 and json.loads(out) == [{"hex": "#ff0000", "percent": 100.0}]


def test_icon_build_search(capsys, tmp_path):
    rng = np.random.default_rng(0)
    recs = [{"id": f"i{k}", "vis_embed": rng.normal(size=8).tolist(), "txt_embed": rng.normal(size=4).tolist()} for k in range(20)]
    src, idx, q = tmp_path / "in.jsonl", tmp_path / "idx.jsonl", tmp_path / "q.json"
    src.write_text("".join(json.dumps(r) + "\n" for r in recs))
    q.write_text(json.dumps(recs[7]))
    assert run(capsys, "icon", "build", "--in", src, "-o", idx)[0] == 0
    code, out, _ = run(capsys, "icon", "search", "--index", idx, "--query", q)
    hits = json.loads(out)
    assert code == 0 and hits[0]["id"] == "i7" and len(hits) == 5


def test_mutate(capsys, tmp_path):
    code, out, _ = run(capsys, "mutate", "--in", SEED_DIR, "--themes", "dark,minimal", "--seed", "7", "--out", tmp_path / "c")
    assert code == 0 and json.loads(out)["bundles"] == 20
    assert (tmp_path / "c" / "music" / "dark" / "widget.jsx").exists()


def test_missing_file(capsys):
    assert run(capsys, "compile", "/nonexistent.json")[0] == 1


def test_unknown_subcommand():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_unknown_flag():
    with pytest.raises(SystemExit) as info:
        main(["validate", str(GOOD), "--bogus"])
    assert info.value.code == 2
