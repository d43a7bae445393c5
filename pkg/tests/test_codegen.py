import math
import re

import pytest
from hypothesis import given, strategies as st

from markup import html_nodes, html_triples, jsx_triples
from widgetforge.codegen import axis_autorange, emit, emit_chart_svg, emit_primitive, to_html
from widgetforge.dsl import ComponentKind, ContainerNode, WidgetSpec, structural_id, walk
from widgetforge.errors import EmptyData, UnsupportedKind
from widgetforge.layout import Box
from widgetforge.synth import load_seeds, random_spec


def attr_values(html: str, cls: str, name: str) -> list[str]:
    return re.findall(rf'<[^>]*class="{cls}"[^>]*\b{name}="([^"]*)"', html)


class TestDocument:
    def test_empty_root_shell(self):
        spec = WidgetSpec(background_color="#000000", root=ContainerNode())
        nodes = html_nodes(emit(spec, "html", size=(100, 100)))
        ids = [n[0] for n in nodes]
        assert ids == ["shell", "n"]
        assert nodes[0][2]["background-color"] == "#000000"

    def test_no_root(self):
        nodes = html_nodes(emit(WidgetSpec(root=None), "html", size=(50, 50)))
        assert [n[0] for n in nodes] == ["shell"]

    def test_html_preamble(self):
        src = emit(random_spec(3), "html")
        assert src.startswith('<html lang="en">') and src.endswith("</html>")

    def test_react_module(self):
        src = emit(random_spec(3), "react")
        assert src.startswith('import React from "react";')
        assert "export default function Widget()" in src
        assert "class=" not in src

    @given(st.integers(0, 100_000))
    def test_deterministic(self, seed):
        spec = random_spec(seed)
        for target in ("html", "react"):
            assert emit(spec, target) == emit(spec, target)

    @given(st.integers(0, 100_000))
    def test_cross_target_triples(self, seed):
        spec = random_spec(seed)
        html, jsx = html_triples(emit(spec, "html")), jsx_triples(emit(spec, "react"))
        assert html == jsx
        assert len(html) == 1 + sum(1 for _ in walk(spec.root))

    @given(st.integers(0, 100_000))
    def test_nesting_depth_matches_ast(self, seed):
        spec = random_spec(seed)
        nodes = {i: d for i, _, _, d in html_nodes(emit(spec, "html"))}
        # every AST edge is one DOM level for containers; leaves may wrap content below
        for path, _ in walk(spec.root):
            sid = structural_id(path)
            assert nodes[sid] - nodes["shell"] == path.count("[") + 1

    def test_render_size_transform(self):
        spec = load_seeds()["battery"]
        src = emit(spec, "html", size=(100, 50), render_size=(200, 100))
        assert "transform: scale(2, 2)" in src


class TestCharts:
    def test_bar_heights_closed_form(self):
        props = {"data": [10, 20, 15, 30], "showAxis": False, "showGrid": False}
        html = to_html(emit_chart_svg(ComponentKind.BarChart, props, Box(0, 0, 100, 100)))
        px_, py, pw, ph = map(float, re.search(r'data-plot="([^"]+)"', html).group(1).split())
        top = float(re.search(r'data-axis="[^ ]+ ([^"]+)"', html).group(1))
        assert top == 40  # 1.1 * 30 = 33 -> 40
        heights = [float(h) for h in attr_values(html, "wf-bar", "height")]
        ys = [float(y) for y in attr_values(html, "wf-bar", "y")]
        for v, h, y in zip(props["data"], heights, ys):
            assert h == pytest.approx(v / top * ph, abs=0.01)
            assert y + h == pytest.approx(py + ph, abs=0.02)
        assert len(heights) == 4

    def test_pie_halves(self):
        html = to_html(emit_chart_svg(ComponentKind.PieChart, {"data": [1, 1]}, Box(0, 0, 100, 100)))
        assert attr_values(html, "wf-wedge", "data-sweep") == ["180", "180"]

    def test_ring_zero(self):
        html = to_html(emit_chart_svg(ComponentKind.ProgressRing, {"value": 0, "thickness": 6}, Box(0, 0, 48, 48)))
        r = 24 - 3
        dash = attr_values(html, "wf-progress", "stroke-dasharray")[0].split()
        assert dash[0] == "0"
        assert float(dash[1]) == pytest.approx(2 * math.pi * r, abs=0.005)
        assert len(attr_values(html, "wf-track", "r")) == 1

    @pytest.mark.parametrize("top, axis", [(65, 80), (847, 1000), (23, 30)])
    def test_autorange_examples(self, top, axis):
        assert axis_autorange([0, top]).max == axis

    @given(st.lists(st.floats(-1e6, 1e6, allow_nan=False).filter(lambda v: abs(v) > 1e-6), min_size=1, max_size=20))
    def test_autorange_covers(self, values):
        rng = axis_autorange(values)
        assert rng.min <= min(0, min(values)) and rng.max >= max(values) and rng.span > 0
        if max(values) > 0:
            m = 10 ** math.floor(math.log10(rng.max))
            assert rng.max / m == pytest.approx(round(rng.max / m))
            assert rng.max >= 1.1 * max(values) * (1 - 1e-12)

    def test_empty_data(self):
        with pytest.raises(EmptyData):
            emit_chart_svg(ComponentKind.BarChart, {"data": []}, Box(0, 0, 10, 10))

    def test_not_a_chart(self):
        with pytest.raises(UnsupportedKind):
            emit_chart_svg(ComponentKind.Text, {}, Box(0, 0, 10, 10))


class TestPrimitives:
    def box(self):
        return Box(0, 0, 60, 60)

    def test_app_logo_radius_and_letter(self):
        el = emit_primitive(ComponentKind.AppLogo, {"name": "Music", "size": 40}, self.box(), None, [])
        html = to_html(el)
        assert 'data-radius="8.8"' in html
        assert ">M<" in html

    def test_circle_button(self):
        el = emit_primitive(ComponentKind.Button, {"shape": "circle", "size": 60, "icon": "sf:SfPlus"}, self.box(), None, [])
        assert 'data-radius="30"' in to_html(el)

    def test_missing_icon_placeholder(self):
        warnings = []
        html = to_html(emit_primitive(ComponentKind.Icon, {"name": "sf:Nope"}, self.box(), None, warnings))
        assert 'data-placeholder="true"' in html
        assert len(warnings) == 1

    def test_text_escaped(self):
        html = to_html(emit_primitive(ComponentKind.Text, {}, self.box(), "<b>&", []))
        assert "&lt;b&gt;&amp;" in html
