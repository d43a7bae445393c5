import pytest
from hypothesis import given, strategies as st

from widgetforge.dsl import ContainerNode, ComponentKind, LeafNode, WidgetSpec, walk
from widgetforge.errors import DegenerateViewport
from widgetforge.layout import (
    LayoutReport,
    layout_report,
    measure_leaf,
    psi,
    solve_layout,
    violation,
)
from widgetforge.synth import random_spec


def text(s, fs=10, **kw):
    return LeafNode(ComponentKind.Text, {"fontSize": fs}, content=s, **kw)


def image(w=None, h=None, **kw):
    return LeafNode(ComponentKind.Image, {"src": "x.png"}, width=w, height=h, **kw)


def spec_of(root, padding=0, aspect=1.0):
    return WidgetSpec(padding=padding, aspect_ratio=aspect, root=root)


class TestMeasure:
    @pytest.mark.parametrize("s, fs", [("Hi", 10), ("Sleep Score", 13), ("", 14), ("café", 12)])
    def test_text_closed_form(self, s, fs):
        w, h = measure_leaf(text(s, fs))
        assert w == pytest.approx(0.6 * fs * len(s))
        assert h == pytest.approx(1.2 * fs)

    def test_grapheme_clusters(self):
        # skin-tone emoji is one user-perceived character
        assert measure_leaf(text("👍🏽", 10))[0] == pytest.approx(6.0)

    def test_icon_square(self):
        assert measure_leaf(LeafNode(ComponentKind.Icon, {"name": "sf:SfHeart", "size": 24})) == (24, 24)

    def test_explicit_dims_win(self):
        assert measure_leaf(image(100, 40)) == (100, 40)


class TestDistribution:
    def test_two_flex_halves(self):
        root = ContainerNode("row", (image(flex=1), image(flex=1)))
        tree = solve_layout(spec_of(root), (100, 100))
        assert [tree.boxes[f"root.children[{i}]"].w for i in range(2)] == [50, 50]

    def test_fixed_and_weighted(self):
        root = ContainerNode("row", (image(30), image(flex=1), image(flex=2)), gap=8, padding=10)
        tree = solve_layout(spec_of(root), (120, 120))
        widths = [tree.boxes[f"root.children[{i}]"].w for i in range(3)]
        # 120 - 2*10 - 2*8 - 30 = 54 left for weights 1:2
        assert widths == pytest.approx([30, 18, 36])
        xs = [tree.boxes[f"root.children[{i}]"].x for i in range(3)]
        assert xs == pytest.approx([10, 48, 74])

    def test_overflow_kept(self):
        root = ContainerNode("row", (image(200),))
        tree = solve_layout(spec_of(root), (100, 100))
        assert tree.boxes["root.children[0]"].w == 200
        assert psi(spec_of(root), (100, 100)) > 0

    def test_degenerate_viewport(self):
        with pytest.raises(DegenerateViewport):
            solve_layout(spec_of(ContainerNode()), (0, 10))

    @given(st.integers(0, 50_000), st.integers(40, 600), st.integers(40, 600))
    def test_main_axis_conservation(self, seed, w, h):
        # children of a container with a flex child exactly fill its inner main axis
        spec = random_spec(seed)
        tree = solve_layout(spec, (w, h))
        for path, node in walk(spec.root):
            if not isinstance(node, ContainerNode) or not node.children:
                continue
            box = tree.boxes[path]
            inner = (box.w if node.direction == "row" else box.h) - 2 * node.padding
            kids = [tree.boxes[f"{path}.children[{i}]"] for i in range(len(node.children))]
            used = sum(k.w if node.direction == "row" else k.h for k in kids) + node.gap * (len(kids) - 1)
            has_flex = any((c.flex or 0) > 0 and (c.width if node.direction == "row" else c.height) is None for c in node.children)
            if has_flex and used <= inner:
                assert used == pytest.approx(inner, abs=1e-9)

    @given(st.integers(0, 50_000), st.integers(20, 400))
    def test_deterministic(self, seed, w):
        spec = random_spec(seed)
        assert solve_layout(spec, (w, w)) == solve_layout(spec, (w, w))


class TestViolation:
    def test_contained(self):
        root = ContainerNode("col", (image(50, 50),))
        report = layout_report(solve_layout(spec_of(root), (100, 100)))
        assert all(d == 0 for d in report.deltas)
        assert report.C_w <= report.V_w and report.C_h <= report.V_h

    def test_ten_px_past_right_edge(self):
        root = ContainerNode("row", (image(110, 50),))
        report = layout_report(solve_layout(spec_of(root), (100, 100)))
        assert max(report.deltas) == pytest.approx(0.1)

    def test_empty_root(self):
        report = layout_report(solve_layout(spec_of(ContainerNode()), (80, 80)))
        assert (report.C_w, report.C_h) == (0, 0)

    @pytest.mark.parametrize(
        "report, expected",
        [
            (LayoutReport(100, 50, 100, 50, (0.0,)), 0.0),
            (LayoutReport(120, 10, 100, 50, (0.0,)), 0.2),
            (LayoutReport(110, 55, 100, 50, (0.3, 0.0)), 0.3),
        ],
    )
    def test_psi_examples(self, report, expected):
        assert violation(report) == pytest.approx(expected)

    @given(
        st.floats(0, 500),
        st.floats(0, 500),
        st.floats(1, 500),
        st.floats(1, 500),
        st.lists(st.floats(0, 2), max_size=8),
    )
    def test_psi_is_max(self, cw, ch, vw, vh, deltas):
        got = violation(LayoutReport(cw, ch, vw, vh, tuple(deltas)))
        terms = [cw / vw - 1 if abs(cw - vw) > 1e-9 else 0.0, ch / vh - 1 if abs(ch - vh) > 1e-9 else 0.0]
        best = terms[0]
        for t in terms[1:] + list(deltas):
            if t > best:
                best = t
        assert got == best
