"""Reusable component templates.

Each template is a directory holding ``template.widget.json`` (a leaf
fragment carrying default styling) and ``params.json``, the slot manifest::

    {"values": {"target": "props.data", "type": "series", "default": [10, 20]}}

``target`` is ``props.<key>`` or a node attribute (``width``, ``height``,
``flex``, ``content``). ``type`` reuses the prop type tags; numeric slots may
add ``min``/``max`` and enum slots ``choices``. A ``null`` default leaves the
fragment untouched unless the caller supplies a value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from functools import lru_cache
from pathlib import Path
from typing import Any, Mapping

from ..errors import BadParameter, UnknownTemplate
from .model import LeafNode, Node
from .parse import parse_node
from .schema import ComponentKind, PropType, is_hex_color, kind_of

TEMPLATE_DIR = Path(__file__).parent / "templates"


@dataclass(frozen=True)
class Slot:
    name: str
    target: str
    ptype: PropType
    default: Any = None
    minimum: float | None = None
    maximum: float | None = None

    def check(self, value: Any) -> bool:
        if not self.ptype.check(value):
            return False
        if self.minimum is not None and value < self.minimum:
            return False
        if self.maximum is not None and value > self.maximum:
            return False
        return True


@dataclass(frozen=True)
class Template:
    kind: ComponentKind
    fragment: Node
    slots: dict[str, Slot]


def _load_slots(manifest: dict) -> dict[str, Slot]:
    slots = {}
    for name, entry in manifest.items():
        ptype = PropType(entry["type"], tuple(entry.get("choices", ())))
        slots[name] = Slot(
            name=name,
            target=entry["target"],
            ptype=ptype,
            default=entry.get("default"),
            minimum=entry.get("min"),
            maximum=entry.get("max"),
        )
    return slots


def load_template(path: Path) -> Template:
    fragment = parse_node(json.loads((path / "template.widget.json").read_text("utf-8")))
    manifest = json.loads((path / "params.json").read_text("utf-8"))
    if not isinstance(fragment, LeafNode):
        raise ValueError(f"{path}: template fragments must be leaf nodes")
    return Template(kind=fragment.component, fragment=fragment, slots=_load_slots(manifest))


@lru_cache(maxsize=None)
def template_library(root: str | None = None) -> dict[ComponentKind, Template]:
    base = Path(root) if root else TEMPLATE_DIR
    library = {}
    for sub in sorted(p for p in base.iterdir() if p.is_dir()):
        tpl = load_template(sub)
        library[tpl.kind] = tpl
    return library


def _assign(node: LeafNode, target: str, value: Any) -> LeafNode:
    if isinstance(value, str) and is_hex_color(value):
        value = value.lower()
    elif isinstance(value, list):
        value = [v.lower() if is_hex_color(v) else v for v in value]
    if target.startswith("props."):
        props = dict(node.props)
        props[target[len("props."):]] = value
        return replace(node, props=props)
    if target in ("width", "height", "flex", "content"):
        return replace(node, **{target: value})
    raise ValueError(f"bad slot target {target!r}")


def instantiate_template(kind: ComponentKind | str, params: Mapping[str, Any] | None = None) -> LeafNode:
    """Fill a template's slots; unset slots keep their defaults."""
    params = dict(params or {})
    resolved = kind_of(kind)
    library = template_library()
    if resolved is None or resolved not in library:
        raise UnknownTemplate(f"no template for {kind!r}")
    tpl = library[resolved]
    unknown = sorted(set(params) - set(tpl.slots))
    if unknown:
        raise BadParameter(f"{resolved}: unknown parameters {unknown}")

    node = tpl.fragment
    for name, slot in tpl.slots.items():
        if name in params:
            value = params[name]
            if not slot.check(value):
                raise BadParameter(f"{resolved}.{name}: {value!r} outside slot domain ({slot.ptype.tag})")
        elif slot.default is not None:
            value = slot.default
        else:
            continue
        node = _assign(node, slot.target, value)
    return node
