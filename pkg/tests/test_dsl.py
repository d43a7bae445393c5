import json

import pytest
from hypothesis import given, strategies as st

from widgetforge.dsl import (
    ComponentKind,
    ContainerNode,
    LeafNode,
    WidgetSpec,
    instantiate_template,
    parse_node,
    parse_widget_dsl,
    repair,
    serialize,
    structural_id,
    template_library,
    validate,
)
from widgetforge.errors import BadParameter, DSLSyntaxError, UnknownComponent, Unrepairable
from widgetforge.synth import random_spec

MINIMAL = (
    '{"widget":{"backgroundColor":"#000000","borderRadius":0,"padding":0,"aspectRatio":1.0,'
    '"root":{"type":"container","direction":"col","children":[]}}}'
)


def doc(root, **shell):
    widget = {"backgroundColor": "#ffffff", "borderRadius": 0, "padding": 0, "aspectRatio": 1.0, "root": root}
    widget.update(shell)
    return json.dumps({"widget": widget})


def col(*children, **kw):
    return {"type": "container", "direction": "col", "children": list(children), **kw}


class TestParse:
    def test_icon_leaf(self):
        node = parse_node(
            {"type": "leaf", "component": "Icon", "props": {"name": "sf:SfHeart", "size": 24, "color": "#FF0000"}}
        )
        assert isinstance(node, LeafNode)
        assert node.component is ComponentKind.Icon
        assert node.props["size"] == 24
        assert node.props["color"].lower() == "#ff0000"

    def test_minimal_shell(self):
        spec = parse_widget_dsl(MINIMAL)
        assert spec.background_color == "#000000"
        assert spec.root == ContainerNode(direction="col", children=())
        assert validate(spec).ok

    def test_unknown_component_path(self):
        text = doc(col({"type": "leaf", "component": "Hologram"}))
        with pytest.raises(UnknownComponent) as info:
            parse_widget_dsl(text)
        assert info.value.path == "root.children[0]"

    def test_syntax_error_position(self):
        with pytest.raises(DSLSyntaxError) as info:
            parse_widget_dsl('{"widget": {\n  "padding": ,\n}}')
        assert info.value.line == 2

    @pytest.mark.parametrize("flex, expected", [(1, 1.0), (0, 0.0), ("none", 0.0), (2.5, 2.5)])
    def test_flex_spellings(self, flex, expected):
        spec = parse_widget_dsl(doc(col(flex=flex)))
        assert spec.root.flex == expected


class TestValidate:
    def test_valid_is_empty(self):
        assert len(validate(parse_widget_dsl(MINIMAL))) == 0

    def test_negative_padding(self):
        report = validate(parse_widget_dsl(doc(col(padding=-4))))
        assert report.codes() == ["NEGATIVE_DIMENSION"]

    def test_text_missing_content_warns(self):
        report = validate(parse_widget_dsl(doc(col({"type": "leaf", "component": "Text", "props": {}}))))
        assert report.codes() == ["MISSING_CONTENT"]
        assert report.findings[0].severity == "warning"
        assert report.ok

    @pytest.mark.parametrize(
        "leaf, code",
        [
            ({"type": "leaf", "component": "Icon", "props": {"name": "sf:SfHeart", "bogus": 1}}, "UNKNOWN_PROP"),
            ({"type": "leaf", "component": "Icon", "props": {"name": "sf:SfHeart", "size": "big"}}, "BAD_PROP_TYPE"),
            ({"type": "leaf", "component": "BarChart", "props": {"data": []}}, "EMPTY_DATA"),
            ({"type": "leaf", "component": "Icon", "props": {"name": "sf:SfHeart"}, "content": "x"}, "UNEXPECTED_CONTENT"),
            ({"type": "leaf", "component": "Icon", "props": {"name": "sf:SfHeart"}, "width": "150%"}, "BAD_DIMENSION"),
        ],
    )
    def test_each_rule_one_finding(self, leaf, code):
        assert validate(parse_widget_dsl(doc(col(leaf)))).codes() == [code]


class TestRepair:
    def test_missing_direction(self):
        spec = parse_widget_dsl(doc({"type": "container", "children": []}))
        fixed, log = repair(spec)
        assert fixed.root.direction == "col"
        assert [e.code for e in log] == ["MISSING_DIRECTION"]

    def test_clamp_padding(self):
        fixed, _ = repair(parse_widget_dsl(doc(col(padding=-4))))
        assert fixed.root.padding == 0

    def test_coerce_numeric_string(self):
        leaf = {"type": "leaf", "component": "Icon", "props": {"name": "sf:SfHeart", "size": "24"}}
        fixed, log = repair(parse_widget_dsl(doc(col(leaf))))
        assert fixed.root.children[0].props["size"] == 24
        assert validate(fixed).ok and len(log) == 1

    def test_missing_root_unrepairable(self):
        with pytest.raises(Unrepairable):
            repair(WidgetSpec(root=None))

    @given(st.integers(0, 10_000))
    def test_repair_idempotent_on_valid(self, seed):
        spec = random_spec(seed)
        fixed, log = repair(spec)
        assert log == [] and fixed == spec


class TestSerialize:
    def test_key_order_independent(self):
        a = '{"widget":{"padding":4,"aspectRatio":2,"backgroundColor":"#FFFFFF","borderRadius":0,"root":{"children":[],"direction":"row","type":"container"}}}'
        b = '{"widget":{"root":{"type":"container","direction":"row","children":[]},"borderRadius":0,"backgroundColor":"#ffffff","aspectRatio":2.0,"padding":4}}'
        assert serialize(parse_widget_dsl(a)) == serialize(parse_widget_dsl(b))

    def test_lowercase_color(self):
        assert '"#ff0000"' in serialize(parse_widget_dsl(doc(col(), backgroundColor="#FF0000")))

    @given(st.integers(0, 100_000))
    def test_round_trip(self, seed):
        spec = random_spec(seed)
        text = serialize(spec)
        again = parse_widget_dsl(text)
        assert again == spec
        assert serialize(again) == text


class TestTemplates:
    def test_library_covers_every_kind(self):
        assert set(template_library()) == set(ComponentKind)

    def test_bar_chart_values(self):
        leaf = instantiate_template("BarChart", {"values": [10, 20, 15, 30]})
        assert leaf.props["data"] == [10, 20, 15, 30]
        assert validate(leaf).ok

    def test_divider_defaults(self):
        leaf = instantiate_template(ComponentKind.Divider, {})
        assert leaf.component is ComponentKind.Divider
        assert validate(leaf).ok

    def test_empty_values_rejected(self):
        with pytest.raises(BadParameter):
            instantiate_template("BarChart", {"values": []})

    @pytest.mark.parametrize("kind", list(ComponentKind))
    def test_defaults_validate(self, kind):
        assert validate(instantiate_template(kind)).ok


@pytest.mark.parametrize(
    "path, sid",
    [("shell", "shell"), ("root", "n"), ("root.children[2].children[0]", "n-2-0"), ("root.children[11]", "n-11")],
)
def test_structural_id(path, sid):
    assert structural_id(path) == sid
