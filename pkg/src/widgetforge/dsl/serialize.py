"""Canonical JSON serialization of WidgetDSL trees."""

from __future__ import annotations

import json
from typing import Any

from .model import ContainerNode, Node, WidgetSpec
from .schema import PROP_SCHEMAS, is_hex_color


def _num(value: Any) -> Any:
    if isinstance(value, float) and value.is_integer():
        return int(value)
    return value


def _value(value: Any) -> Any:
    if isinstance(value, list):
        return [_value(v) for v in value]
    if isinstance(value, str) and is_hex_color(value):
        return value.lower()
    return _num(value)


def node_to_obj(node: Node) -> dict:
    """Build the canonical dict for a node; keys appear in schema order."""
    out: dict[str, Any] = {}
    if isinstance(node, ContainerNode):
        out["type"] = "container"
        out["direction"] = node.direction
        out["gap"] = _num(node.gap)
        if node.flex is not None:
            out["flex"] = _num(node.flex)
        if node.width is not None:
            out["width"] = _num(node.width)
        if node.height is not None:
            out["height"] = _num(node.height)
        out["padding"] = _num(node.padding)
        if node.background_color is not None:
            out["backgroundColor"] = _value(node.background_color)
        if node.border_radius is not None:
            out["borderRadius"] = _num(node.border_radius)
        out["children"] = [node_to_obj(c) for c in node.children]
        return out

    out["type"] = "leaf"
    out["component"] = str(node.component)
    if node.flex is not None:
        out["flex"] = _num(node.flex)
    if node.width is not None:
        out["width"] = _num(node.width)
    if node.height is not None:
        out["height"] = _num(node.height)
    schema = PROP_SCHEMAS[node.component]
    order = {key: i for i, key in enumerate(schema)}
    keys = sorted(node.props, key=lambda k: (order.get(k, len(order)), k))
    out["props"] = {k: _value(node.props[k]) for k in keys}
    if node.content is not None:
        out["content"] = node.content
    return out


def spec_to_obj(spec: WidgetSpec) -> dict:
    shell: dict[str, Any] = {
        "backgroundColor": _value(spec.background_color),
        "borderRadius": _num(spec.border_radius),
        "padding": _num(spec.padding),
        "aspectRatio": _num(spec.aspect_ratio),
    }
    if spec.root is not None:
        shell["root"] = node_to_obj(spec.root)
    return {"widget": shell}


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def serialize(spec: WidgetSpec | Node) -> str:
    """Canonical UTF-8 JSON text: schema key order, 2-space indent, lowercase hex."""
    if isinstance(spec, WidgetSpec):
        return dumps(spec_to_obj(spec))
    return dumps(node_to_obj(spec))
