"""End-to-end acceptance checks, each against an independent oracle."""

import math
import random
import time
from collections import Counter

import numpy as np
import pytest

from fixtures import fixture_images
from markup import html_nodes, jsx_nodes
from oracles import emd_linprog, naive_two_stage, pixel_count_palette, ssim_direct
from widgetforge.codegen import axis_autorange, compile_spec, emit
from widgetforge.dsl import parse_widget_dsl, serialize, structural_id, walk
from widgetforge.fit import finalize_render_size, fit_width, render_dims
from widgetforge.icons import DEFAULT_FINAL, DEFAULT_K, IconQuery, build_index, search
from widgetforge.layout import psi
from widgetforge.metrics import evaluate_pair, geometry_score, ssim, wasserstein_1d
from widgetforge.palette import extract_palette
from widgetforge.synth import Theme, batch_generate, load_seeds, random_spec, structure_hash

SUITE = [random_spec(10_000 + i) for i in range(50)]
IDENTITY_FIELDS = ("margin", "content", "area", "text", "contrast", "loccon", "palette", "vibrancy", "polarity", "geometry")


def test_metric_identity(acceptance):
    failures = []
    worst_1024 = 0.0
    for name, img, ocr in fixture_images(25):
        report = evaluate_pair(img, img, ocr, ocr)
        for field in IDENTITY_FIELDS:
            value = getattr(report, field)
            if value is None or abs(value - 100) > 1e-6:
                failures.append(f"{name}.{field}={value}")
        if abs(report.ssim - 1.0) > 1e-9:
            failures.append(f"{name}.ssim={report.ssim}")
        if img.size == (1024, 1024):
            # best of three damps scheduler noise on shared machines
            timings = []
            for _ in range(3):
                t0 = time.perf_counter()
                evaluate_pair(img, img, ocr, ocr)
                timings.append(time.perf_counter() - t0)
            worst_1024 = max(worst_1024, min(timings))
    ok = not failures and worst_1024 < 1.0
    acceptance(1, ok, f"25 fixtures, {len(failures)} deviations, 1024x1024 pair {worst_1024:.2f}s")
    assert not failures, failures[:10]
    assert worst_1024 < 1.0


def test_geometry_closure(acceptance):
    rng = random.Random(2)
    bad = []
    for i, spec in enumerate(SUITE):
        target = (rng.randint(64, 1200), rng.randint(64, 1200))
        fit = fit_width(spec)
        scale = finalize_render_size(fit, target)
        dims = render_dims(fit, scale)
        result = compile_spec(spec, "html", size=(fit.w_star, fit.h_star), render_size=target)
        score = geometry_score(target, dims)
        if dims != target or score != 100.0 or result.render_size != target:
            bad.append((i, target, dims, score))
    acceptance(2, not bad, f"{len(SUITE) - len(bad)}/{len(SUITE)} specs hit target dims with geometry 100")
    assert not bad, bad


def brute_force_min_width(spec, limit=5000):
    r = spec.aspect_ratio
    for w in range(1, limit + 1):
        if psi(spec, (float(w), w / r)) <= 0:
            return w
    return None


def test_fit_minimality(acceptance):
    bad = []
    max_iter = 0
    for i, spec in enumerate(SUITE):
        fit = fit_width(spec)
        max_iter = max(max_iter, fit.iterations)
        oracle = brute_force_min_width(spec)
        if fit.psi_star > 0 or oracle is None or abs(fit.w_star - oracle) > 1 or fit.iterations > 40:
            bad.append((i, fit.w_star, oracle, fit.iterations))
    acceptance(3, not bad, f"{len(SUITE) - len(bad)}/{len(SUITE)} minimal, max {max_iter} layout evaluations")
    assert not bad, bad


def test_axis_autorange(acceptance):
    got = {v: axis_autorange([v]).max for v in (65, 847, 23)}
    ok = got == {65: 80, 847: 1000, 23: 30}
    acceptance(4, ok, f"65->{got[65]:g}, 847->{got[847]:g}, 23->{got[23]:g}")
    assert ok


def test_compiler_determinism(acceptance):
    problems = Counter()
    for seed in range(1000):
        spec = random_spec(seed)
        text = serialize(spec)
        again = parse_widget_dsl(text)
        if again != spec or serialize(again) != text:
            problems["round-trip"] += 1
        fit = fit_width(spec)
        size = (fit.w_star, fit.h_star)
        html = emit(spec, "html", size=size)
        jsx = emit(spec, "react", size=size)
        if html != emit(spec, "html", size=size) or jsx != emit(spec, "react", size=size):
            problems["non-deterministic"] += 1
        expected = Counter(["shell"] + [structural_id(p) for p, _ in walk(spec.root)])
        if Counter(n[0] for n in html_nodes(html)) != expected or Counter(n[0] for n in jsx_nodes(jsx)) != expected:
            problems["id multiset"] += 1
    acceptance(5, not problems, f"1000 specs, problems: {dict(problems) or 'none'}")
    assert not problems, problems


def test_palette_exactness(acceptance):
    rng = np.random.default_rng(6)
    bad = []
    for i in range(20):
        n_colors = int(rng.integers(1, 9))
        colors = np.unique(rng.integers(0, 256, (n_colors * 3, 3), dtype=np.uint8), axis=0)[:n_colors]
        h, w = int(rng.integers(16, 200)), int(rng.integers(16, 200))
        img = colors[rng.choice(len(colors), size=(h, w), p=rng.dirichlet(np.ones(len(colors))))]
        oracle = pixel_count_palette(img)
        pal = extract_palette(img)
        got = {e.hex: e.weight for e in pal.entries}
        exact = set(got) == set(oracle) and all(abs(got[k] - oracle[k]) <= 0.005 for k in oracle)
        if not exact or abs(math.fsum(pal.all_weights) - 1.0) > 1e-9:
            bad.append(i)
    acceptance(6, not bad, f"{20 - len(bad)}/20 images exact")
    assert not bad, bad


@pytest.fixture(scope="module")
def big_index():
    rng = np.random.default_rng(7)
    n, dv, dt = 10_000, 64, 32
    vis, txt = rng.normal(size=(n, dv)), rng.normal(size=(n, dt))
    return build_index({"id": f"icon-{i:05d}", "vis_embed": vis[i], "txt_embed": txt[i]} for i in range(n))


def test_retrieval_oracle(acceptance, big_index):
    rng = np.random.default_rng(8)
    ids = [r.id for r in big_index.records]
    vis, txt = big_index.vis.tolist(), big_index.txt.tolist()
    mismatches = 0
    for _ in range(200):
        q = IconQuery.from_obj({"vis_embed": rng.normal(size=64), "txt_embed": rng.normal(size=32)})
        if search(big_index, q) != naive_two_stage(vis, txt, ids, q.vis_embed.tolist(), q.txt_embed.tolist()):
            mismatches += 1
    self_misses = sum(
        search(big_index, IconQuery(r.vis_embed, r.txt_embed))[0] != r.id for r in big_index.records
    )
    ok = mismatches == 0 and self_misses == 0 and (DEFAULT_K, DEFAULT_FINAL) == (50, 5)
    acceptance(7, ok, f"200 queries, {mismatches} oracle mismatches; self-retrieval misses {self_misses}/10000")
    assert ok


def test_emd_oracle(acceptance):
    rng = np.random.default_rng(9)
    worst = 0.0
    for _ in range(500):
        b = int(rng.integers(2, 33))
        p, q = rng.random(b), rng.random(b)
        p[rng.random(b) < 0.3] = 0
        q[rng.random(b) < 0.3] = 0
        p[0] += p.sum() == 0
        q[-1] += q.sum() == 0
        worst = max(worst, abs(wasserstein_1d(p, q) - emd_linprog(p, q)))
    ok = worst <= 1e-9
    acceptance(8, ok, f"500 pairs, max |W1 - LP transport| = {worst:.1e}")
    assert ok


def test_ssim_oracle(acceptance):
    rng = np.random.default_rng(10)
    worst = 0.0
    exact = True
    for i in range(50):
        x = rng.random((16, 16))
        y = np.clip(x + rng.normal(0, 0.3 * (i % 5) / 4 + 0.01, (16, 16)), 0, 1) if i % 2 else rng.random((16, 16))
        worst = max(worst, abs(ssim(x, y) - ssim_direct(x, y)))
        exact &= ssim(x, x) == 1.0
    ok = worst <= 1e-6 and exact
    acceptance(9, ok, f"50 pairs, max deviation {worst:.1e}, identical pairs exactly 1.0: {exact}")
    assert ok


def test_synth_corpus(acceptance):
    seeds = load_seeds()
    bundles, failures = batch_generate(seeds, list(Theme), seed=7)
    invalid = sum(1 for b in bundles if any(f["severity"] == "error" for f in b.validation))
    hash_drift = sum(1 for b in bundles if b.structure_hash != structure_hash(seeds[b.spec_id]))
    join_gaps = 0
    for b in bundles:
        layout_ids = Counter(box["id"] for box in b.layout["boxes"])
        html_ids = Counter(n[0] for n in html_nodes(b.code_html))
        jsx_ids = Counter(n[0] for n in jsx_nodes(b.code_react))
        join_gaps += not (layout_ids == html_ids == jsx_ids)
    ok = len(seeds) == 10 and len(bundles) == 50 and not failures and invalid == hash_drift == join_gaps == 0
    acceptance(10, ok, f"{len(bundles)} bundles, {invalid} invalid, {hash_drift} hash changes, {join_gaps} id join gaps")
    assert ok
