import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_two_stage
from widgetforge.errors import DimensionMismatch, DuplicateId, EmptyIndex
from widgetforge.icons import IconIndex, IconQuery, build_index, search


def records(n, dv=16, dt=8, seed=0):
    rng = np.random.default_rng(seed)
    return [
        {"id": f"icon{i:05d}", "svg_path": f"sf/{i}.svg", "caption": f"icon {i}",
         "vis_embed": rng.normal(size=dv).tolist(), "txt_embed": rng.normal(size=dt).tolist()}
        for i in range(n)
    ]


def test_build_size_and_normalized():
    index = build_index(records(3))
    assert len(index) == 3
    np.testing.assert_allclose(np.linalg.norm(index.vis, axis=1), 1.0)
    np.testing.assert_allclose(np.linalg.norm(index.txt, axis=1), 1.0)


def test_dimension_mismatch():
    recs = records(2, dv=768) + records(1, dv=512, seed=1)
    recs[-1]["id"] = "odd"
    with pytest.raises(DimensionMismatch):
        build_index(recs)


def test_duplicate_id():
    recs = records(2)
    recs[1]["id"] = recs[0]["id"]
    with pytest.raises(DuplicateId):
        build_index(recs)


def test_empty():
    q = IconQuery(np.ones(4) / 2, np.ones(4) / 2)
    with pytest.raises(EmptyIndex):
        IconIndex([]).search(q)


def test_jsonl_lines():
    lines = [json.dumps(r) + "\n" for r in records(4)] + ["\n"]
    assert len(build_index(lines)) == 4


def test_read_only():
    index = build_index(records(3))
    with pytest.raises(ValueError):
        index.vis[0, 0] = 1.0


@settings(max_examples=30)
@given(st.integers(0, 2**31), st.integers(1, 120))
def test_self_retrieval(seed, n):
    recs = records(n, seed=seed)
    index = build_index(recs)
    i = seed % n
    q = IconQuery.from_obj(recs[i])
    assert search(index, q)[0] == recs[i]["id"]


@settings(max_examples=30)
@given(st.integers(0, 2**31), st.integers(1, 60), st.integers(1, 10), st.integers(1, 8))
def test_matches_naive(seed, n, k, final):
    recs = records(n, seed=seed)
    index = build_index(recs)
    rng = np.random.default_rng(seed + 1)
    q = IconQuery.from_obj({"vis_embed": rng.normal(size=16), "txt_embed": rng.normal(size=8)})
    expected = naive_two_stage(index.vis, index.txt, [r["id"] for r in recs], q.vis_embed, q.txt_embed, k, final)
    assert search(index, q, k, final) == expected


def test_small_index_is_text_ranking():
    recs = records(10)
    index = build_index(recs)
    q = IconQuery.from_obj(records(1, seed=9)[0])
    by_text = sorted(range(10), key=lambda i: (-float(index.txt[i] @ q.txt_embed), recs[i]["id"]))
    assert search(index, q, k=50, final=10) == [recs[i]["id"] for i in by_text]


def test_ties_break_by_id():
    v = [1.0, 0.0]
    recs = [{"id": name, "vis_embed": v, "txt_embed": v} for name in ("b", "c", "a")]
    q = IconQuery.from_obj({"vis_embed": v, "txt_embed": v})
    assert search(build_index(recs), q) == ["a", "b", "c"]
