"""JSON text -> typed WidgetDSL tree.

Parsing is structural: JSON shapes and node-level number types are enforced
here, while value-domain problems (negative padding, unknown prop keys,
type-confused prop values) are left for ``validate``/``repair``.
"""

from __future__ import annotations

import json
from typing import Any

from ..errors import DSLSyntaxError, SchemaError, UnknownComponent
from .model import ContainerNode, LeafNode, Node, WidgetSpec, child_path
from .schema import PROP_SCHEMAS, is_hex_color, is_number, kind_of

SHELL_KEYS = ("backgroundColor", "borderRadius", "padding", "aspectRatio", "root")
CONTAINER_KEYS = (
    "type",
    "direction",
    "gap",
    "flex",
    "width",
    "height",
    "padding",
    "backgroundColor",
    "borderRadius",
    "children",
)
LEAF_KEYS = ("type", "component", "flex", "width", "height", "props", "content")


def _reject_constant(name: str) -> Any:
    raise ValueError(f"non-finite number {name}")


def load_json(text: str | bytes) -> Any:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DSLSyntaxError(f"invalid UTF-8: {exc.reason}", 1, exc.start + 1) from exc
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise DSLSyntaxError(exc.msg, exc.lineno, exc.colno) from exc
    except ValueError as exc:
        raise DSLSyntaxError(str(exc), 1, 1) from exc


def parse_widget_dsl(text: str | bytes) -> WidgetSpec:
    """Parse a ``{"widget": {...}}`` document."""
    doc = load_json(text)
    return spec_from_obj(doc)


def spec_from_obj(doc: Any) -> WidgetSpec:
    if not isinstance(doc, dict) or "widget" not in doc:
        raise SchemaError("$", 'expected an object with a "widget" key')
    extra = set(doc) - {"widget"}
    if extra:
        raise SchemaError("$", f"unexpected top-level keys {sorted(extra)}")
    shell = doc["widget"]
    if not isinstance(shell, dict):
        raise SchemaError("widget", "expected an object")
    _check_keys(shell, SHELL_KEYS, "widget")

    root = shell.get("root")
    if root is not None:
        root = parse_node(root, "root")
        if not isinstance(root, ContainerNode):
            raise SchemaError("root", "root must be a container node")
    aspect = shell.get("aspectRatio")
    if aspect is not None:
        aspect = _number(aspect, "widget.aspectRatio")
    return WidgetSpec(
        background_color=_color(shell.get("backgroundColor", "#ffffff"), "widget.backgroundColor"),
        border_radius=_number(shell.get("borderRadius", 0), "widget.borderRadius"),
        padding=_number(shell.get("padding", 0), "widget.padding"),
        aspect_ratio=aspect,
        root=root,
    )


def parse_node(obj: Any, path: str = "root") -> Node:
    """Parse one container or leaf object (also used for template fragments)."""
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected a node object")
    node_type = obj.get("type")
    if node_type == "container":
        return _parse_container(obj, path)
    if node_type == "leaf":
        return _parse_leaf(obj, path)
    raise SchemaError(path, f'"type" must be "container" or "leaf", got {node_type!r}')


def _parse_container(obj: dict, path: str) -> ContainerNode:
    _check_keys(obj, CONTAINER_KEYS, path)
    children = obj.get("children", [])
    if not isinstance(children, list):
        raise SchemaError(f"{path}.children", "expected an array")
    direction = obj.get("direction")
    if direction is not None and not isinstance(direction, str):
        raise SchemaError(f"{path}.direction", "expected a string")
    bg = obj.get("backgroundColor")
    radius = obj.get("borderRadius")
    return ContainerNode(
        direction=direction,
        children=tuple(parse_node(c, child_path(path, i)) for i, c in enumerate(children)),
        gap=_number(obj.get("gap", 0), f"{path}.gap"),
        flex=_flex(obj.get("flex"), f"{path}.flex"),
        width=_dimension(obj.get("width"), f"{path}.width"),
        height=_dimension(obj.get("height"), f"{path}.height"),
        padding=_number(obj.get("padding", 0), f"{path}.padding"),
        background_color=None if bg is None else _color(bg, f"{path}.backgroundColor"),
        border_radius=None if radius is None else _number(radius, f"{path}.borderRadius"),
    )


def _parse_leaf(obj: dict, path: str) -> LeafNode:
    _check_keys(obj, LEAF_KEYS, path)
    name = obj.get("component")
    if not isinstance(name, str):
        raise SchemaError(f"{path}.component", "expected a component name string")
    kind = kind_of(name)
    if kind is None:
        raise UnknownComponent(path, f"unknown component {name!r}")
    props = obj.get("props", {})
    if not isinstance(props, dict):
        raise SchemaError(f"{path}.props", "expected an object")
    content = obj.get("content")
    if content is not None and not isinstance(content, str):
        raise SchemaError(f"{path}.content", "expected a string")
    return LeafNode(
        component=kind,
        props=_normalize_props(kind, props),
        flex=_flex(obj.get("flex"), f"{path}.flex"),
        width=_dimension(obj.get("width"), f"{path}.width"),
        height=_dimension(obj.get("height"), f"{path}.height"),
        content=content,
    )


def _normalize_props(kind, props: dict) -> dict:
    schema = PROP_SCHEMAS[kind]
    out = {}
    for key, value in props.items():
        ptype = schema.get(key)
        if ptype is not None and ptype.tag == "color" and is_hex_color(value):
            value = value.lower()
        elif ptype is not None and ptype.tag == "colors" and isinstance(value, list):
            value = [v.lower() if is_hex_color(v) else v for v in value]
        out[key] = value
    return out


def _check_keys(obj: dict, allowed: tuple[str, ...], path: str) -> None:
    extra = [k for k in obj if k not in allowed]
    if extra:
        raise SchemaError(path, f"unexpected keys {extra}")


def _number(value: Any, path: str) -> float:
    if not is_number(value):
        raise SchemaError(path, f"expected a finite number, got {value!r}")
    return value


def _flex(value: Any, path: str) -> float | None:
    if value is None:
        return None
    if value == "none":
        return 0
    return _number(value, path)


def _dimension(value: Any, path: str):
    if value is None or isinstance(value, str):
        return value
    return _number(value, path)


def _color(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise SchemaError(path, "expected a color string")
    return value.lower() if is_hex_color(value) else value
