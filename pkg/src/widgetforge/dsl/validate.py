"""Schema validation and deterministic repair of WidgetDSL trees."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any

from ..errors import Unrepairable
from .model import ContainerNode, LeafNode, Node, WidgetSpec, child_path
from .schema import (
    PERCENT_RE,
    PROP_SCHEMAS,
    ComponentKind,
    PropType,
    is_hex_color,
    is_number,
    is_numeric_string,
)

ERROR = "error"
WARNING = "warning"

DIRECTION_ALIASES = {
    "column": "col",
    "vertical": "col",
    "horizontal": "row",
    "Row": "row",
    "Col": "col",
    "Column": "col",
}


@dataclass(frozen=True)
class Finding:
    path: str
    code: str
    message: str
    severity: str = ERROR

    def to_json(self) -> dict:
        return {"path": self.path, "code": self.code, "message": self.message, "severity": self.severity}


@dataclass
class ValidationReport:
    findings: list[Finding] = field(default_factory=list)

    def add(self, path: str, code: str, message: str, severity: str = ERROR) -> None:
        self.findings.append(Finding(path, code, message, severity))

    @property
    def errors(self) -> list[Finding]:
        return [f for f in self.findings if f.severity == ERROR]

    @property
    def ok(self) -> bool:
        return not self.errors

    def codes(self) -> list[str]:
        return [f.code for f in self.findings]

    def __len__(self) -> int:
        return len(self.findings)

    def __bool__(self) -> bool:
        return bool(self.findings)

    def to_json(self) -> list[dict]:
        return [f.to_json() for f in self.findings]


@dataclass(frozen=True)
class RepairEntry:
    path: str
    code: str
    before: Any
    after: Any

    def to_json(self) -> dict:
        return {"path": self.path, "code": self.code, "before": self.before, "after": self.after}


RepairLog = list[RepairEntry]


# -- validation -------------------------------------------------------------


def validate(spec: WidgetSpec | Node) -> ValidationReport:
    """Check every type invariant and prop schema; findings never raise."""
    report = ValidationReport()
    if isinstance(spec, WidgetSpec):
        _validate_shell(spec, report)
        if spec.root is not None:
            _validate_node(spec.root, "root", report)
    else:
        _validate_node(spec, "root", report)
    return report


def _validate_shell(spec: WidgetSpec, report: ValidationReport) -> None:
    if spec.root is None:
        report.add("widget.root", "MISSING_ROOT", "widget has no root container")
    if spec.aspect_ratio is None:
        report.add("widget.aspectRatio", "MISSING_FIELD", "aspectRatio is required")
    elif spec.aspect_ratio <= 0:
        report.add("widget.aspectRatio", "NONPOSITIVE_ASPECT", f"aspectRatio {spec.aspect_ratio} must be > 0")
    for name, value in (("padding", spec.padding), ("borderRadius", spec.border_radius)):
        if value < 0:
            report.add(f"widget.{name}", "NEGATIVE_DIMENSION", f"{name} {value} is negative")
    if not is_hex_color(spec.background_color):
        report.add("widget.backgroundColor", "BAD_COLOR", f"{spec.background_color!r} is not a hex color")


def _check_sizing(node: Node, path: str, report: ValidationReport) -> None:
    if node.flex is not None and node.flex < 0:
        report.add(f"{path}.flex", "NEGATIVE_DIMENSION", f"flex {node.flex} is negative")
    for name in ("width", "height"):
        value = getattr(node, name)
        if value is None:
            continue
        if isinstance(value, str):
            m = PERCENT_RE.match(value)
            if m is None:
                report.add(f"{path}.{name}", "BAD_DIMENSION", f"{value!r} is neither px nor percent")
            elif not 0 < float(m.group(1)) <= 100:
                report.add(f"{path}.{name}", "BAD_DIMENSION", f"percent {value!r} outside (0, 100]")
        elif value < 0:
            report.add(f"{path}.{name}", "NEGATIVE_DIMENSION", f"{name} {value} is negative")


def _validate_node(node: Node, path: str, report: ValidationReport) -> None:
    _check_sizing(node, path, report)
    if isinstance(node, ContainerNode):
        if node.direction is None:
            report.add(f"{path}.direction", "MISSING_DIRECTION", "container has no direction")
        elif node.direction not in ("row", "col"):
            report.add(f"{path}.direction", "BAD_DIRECTION", f"direction {node.direction!r}")
        for name, value in (("gap", node.gap), ("padding", node.padding), ("borderRadius", node.border_radius)):
            if value is not None and value < 0:
                report.add(f"{path}.{name}", "NEGATIVE_DIMENSION", f"{name} {value} is negative")
        if node.background_color is not None and not is_hex_color(node.background_color):
            report.add(f"{path}.backgroundColor", "BAD_COLOR", f"{node.background_color!r} is not a hex color")
        for i, child in enumerate(node.children):
            _validate_node(child, child_path(path, i), report)
        return

    kind = node.component
    schema = PROP_SCHEMAS[kind]
    for key, value in node.props.items():
        ptype = schema.get(key)
        if ptype is None:
            report.add(f"{path}.props.{key}", "UNKNOWN_PROP", f"{kind} has no prop {key!r}")
        elif isinstance(value, list) and not value and ptype.tag in ("series", "series1", "series2d", "weights"):
            report.add(f"{path}.props.{key}", "EMPTY_DATA", "data series is empty")
        elif not ptype.check(value):
            report.add(f"{path}.props.{key}", "BAD_PROP_TYPE", f"{value!r} is not a valid {ptype.tag}")
    for key, ptype in schema.items():
        if ptype.required and key not in node.props:
            report.add(f"{path}.props.{key}", "MISSING_PROP", f"{kind} requires {key!r}")
    if kind == ComponentKind.Text:
        if node.content is None:
            report.add(f"{path}.content", "MISSING_CONTENT", "Text has no content", WARNING)
    elif node.content is not None:
        report.add(f"{path}.content", "UNEXPECTED_CONTENT", f"content is only allowed on Text, not {kind}")
    if kind == ComponentKind.Button and "icon" in node.props and "content" in node.props:
        report.add(f"{path}.props", "BUTTON_ICON_AND_CONTENT", "Button holds an icon or text, never both")


# -- repair -----------------------------------------------------------------


def repair(spec: WidgetSpec) -> tuple[WidgetSpec, RepairLog]:
    """Apply the fixed repair rules; raise ``Unrepairable`` if structure is missing.

    Rules, in order: default a missing direction to "col", coerce numeric
    strings, clamp negative dimensions to 0, drop unknown and invalid prop
    keys, drop ``content`` on non-Text leaves, give Text an empty content,
    drop Button text when an icon is present.
    """
    log: RepairLog = []
    if spec.root is None:
        raise Unrepairable("widget has no root container")
    if spec.aspect_ratio is None or spec.aspect_ratio <= 0:
        raise Unrepairable(f"aspectRatio {spec.aspect_ratio!r} cannot be repaired")
    changes: dict[str, Any] = {}
    for attr, name in (("padding", "padding"), ("border_radius", "borderRadius")):
        value = getattr(spec, attr)
        if value < 0:
            log.append(RepairEntry(f"widget.{name}", "NEGATIVE_DIMENSION", value, 0))
            changes[attr] = 0
    if not is_hex_color(spec.background_color):
        log.append(RepairEntry("widget.backgroundColor", "BAD_COLOR", spec.background_color, "#ffffff"))
        changes["background_color"] = "#ffffff"
    root = repair_node(spec.root, "root", log)
    return replace(spec, root=root, **changes), log


def repair_node(node: Node, path: str, log: RepairLog) -> Node:
    changes: dict[str, Any] = {}
    if node.flex is not None and node.flex < 0:
        log.append(RepairEntry(f"{path}.flex", "NEGATIVE_DIMENSION", node.flex, 0))
        changes["flex"] = 0
    for name in ("width", "height"):
        value = getattr(node, name)
        fixed = _repair_dimension(value)
        if fixed != value or type(fixed) is not type(value):
            log.append(RepairEntry(f"{path}.{name}", "BAD_DIMENSION", value, fixed))
            changes[name] = fixed

    if isinstance(node, ContainerNode):
        if node.direction not in ("row", "col"):
            fixed = DIRECTION_ALIASES.get(node.direction, "col") if node.direction else "col"
            code = "MISSING_DIRECTION" if node.direction is None else "BAD_DIRECTION"
            log.append(RepairEntry(f"{path}.direction", code, node.direction, fixed))
            changes["direction"] = fixed
        for attr, name in (("gap", "gap"), ("padding", "padding"), ("border_radius", "borderRadius")):
            value = getattr(node, attr)
            if value is not None and value < 0:
                log.append(RepairEntry(f"{path}.{name}", "NEGATIVE_DIMENSION", value, 0))
                changes[attr] = 0
        if node.background_color is not None and not is_hex_color(node.background_color):
            log.append(RepairEntry(f"{path}.backgroundColor", "BAD_COLOR", node.background_color, None))
            changes["background_color"] = None
        children = tuple(repair_node(c, child_path(path, i), log) for i, c in enumerate(node.children))
        if any(a is not b for a, b in zip(children, node.children)):
            changes["children"] = children
        return replace(node, **changes) if changes else node

    props = _repair_props(node, path, log)
    if props is not node.props:
        changes["props"] = props
    if node.component == ComponentKind.Text:
        if node.content is None:
            log.append(RepairEntry(f"{path}.content", "MISSING_CONTENT", None, ""))
            changes["content"] = ""
    elif node.content is not None:
        log.append(RepairEntry(f"{path}.content", "UNEXPECTED_CONTENT", node.content, None))
        changes["content"] = None
    return replace(node, **changes) if changes else node


def _coerce_number(value: Any) -> Any:
    if is_numeric_string(value):
        number = float(value)
        return int(number) if number.is_integer() else number
    return value


def _repair_dimension(value: Any) -> Any:
    if value is None:
        return None
    if isinstance(value, str):
        m = PERCENT_RE.match(value)
        if m is not None:
            pct = float(m.group(1))
            if pct <= 0:
                return None
            if pct > 100:
                return "100%"
            return value
        value = _coerce_number(value)
        if isinstance(value, str):
            return None
    return 0 if value < 0 else value


def _clamp_prop(ptype: PropType, value: Any) -> Any:
    if ptype.tag == "size":
        return max(value, 0)
    if ptype.tag == "fraction":
        return min(max(value, 0), 1)
    if ptype.tag == "weight":
        return min(max(value, 1), 1000)
    return value


def _repair_value(ptype: PropType, value: Any) -> Any:
    """Best-effort fix of one prop value; returns ``_DROP`` if hopeless."""
    if ptype.check(value):
        return value
    if ptype.numeric:
        value = _coerce_number(value)
        if is_number(value):
            value = _clamp_prop(ptype, value)
            return value if ptype.check(value) else _DROP
        return _DROP
    if ptype.tag in ("series", "series1", "series2d", "weights") and isinstance(value, list):
        fixed = [
            [_coerce_number(v) for v in row] if isinstance(row, list) else _coerce_number(row)
            for row in value
        ]
        return fixed if ptype.check(fixed) else _DROP
    if ptype.tag == "colors" and isinstance(value, list):
        kept = [v.lower() for v in value if is_hex_color(v)]
        return kept if kept else _DROP
    if ptype.tag == "bool" and value in ("true", "false"):
        return value == "true"
    if ptype.tag == "string" and is_number(value):
        return str(value)
    return _DROP


_DROP = object()


def _repair_props(node: LeafNode, path: str, log: RepairLog) -> dict:
    schema = PROP_SCHEMAS[node.component]
    out: dict = {}
    changed = False
    for key, value in node.props.items():
        ppath = f"{path}.props.{key}"
        ptype = schema.get(key)
        if ptype is None:
            log.append(RepairEntry(ppath, "UNKNOWN_PROP", value, None))
            changed = True
            continue
        fixed = _repair_value(ptype, value)
        if fixed is _DROP:
            if ptype.required:
                raise Unrepairable(f"{ppath}: required prop value {value!r} cannot be repaired")
            log.append(RepairEntry(ppath, "BAD_PROP_TYPE", value, None))
            changed = True
            continue
        if fixed is not value:
            log.append(RepairEntry(ppath, "BAD_PROP_TYPE", value, fixed))
            changed = True
        out[key] = fixed
    for key, ptype in schema.items():
        if ptype.required and key not in out:
            raise Unrepairable(f"{path}.props.{key}: required prop missing")
    if node.component == ComponentKind.Button and "icon" in out and "content" in out:
        log.append(RepairEntry(f"{path}.props.content", "BUTTON_ICON_AND_CONTENT", out["content"], None))
        del out["content"]
        changed = True
    return out if changed else node.props
