"""Recursive AST -> element tree translation and document assembly."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ..dsl.model import ContainerNode, LeafNode, Node, WidgetSpec, child_path, structural_id
from ..dsl.schema import CHART_KINDS, ComponentKind
from ..errors import UnsupportedKind
from ..fit import fit_width
from ..layout import Box, LayoutTree, solve_layout
from .charts import emit_chart_svg
from .elements import Element, fmt, px, to_html, to_jsx
from .primitives import emit_primitive

FONT_STACK = '-apple-system, "SF Pro Text", "Helvetica Neue", Arial, sans-serif'


class EmitTarget(str, Enum):
    Html = "html"
    React = "react"

    def __str__(self) -> str:
        return self.value


@dataclass
class CompileResult:
    source: str
    warnings: list[str] = field(default_factory=list)
    size: tuple[float, float] = (0.0, 0.0)
    render_size: tuple[float, float] = (0.0, 0.0)


def _dim(value) -> str:
    return value if isinstance(value, str) else px(value)


def _sizing(node: Node) -> dict[str, str]:
    style = {}
    if node.flex is not None and node.flex > 0:
        style["flex"] = f"{fmt(node.flex)} 0 0px"
    else:
        style["flex"] = "0 0 auto"
    if node.width is not None:
        style["width"] = _dim(node.width)
    if node.height is not None:
        style["height"] = _dim(node.height)
    style["min-width"] = "0"
    style["min-height"] = "0"
    return style


def _container(node: ContainerNode, path: str, ctx: "_Ctx") -> Element:
    style = {
        "display": "flex",
        "flex-direction": "row" if node.direction == "row" else "column",
        "align-items": "stretch",
        "box-sizing": "border-box",
        **_sizing(node),
        "gap": px(node.gap),
        "padding": px(node.padding),
    }
    if node.background_color is not None:
        style["background-color"] = node.background_color
    if node.border_radius is not None:
        style["border-radius"] = px(node.border_radius)
    el = Element("div", {"data-wf-id": structural_id(path), "data-wf-kind": "container"}, style)
    for i, child in enumerate(node.children):
        el.add(_node(child, child_path(path, i), ctx))
    return el


def _leaf(node: LeafNode, path: str, ctx: "_Ctx") -> Element:
    kind = node.component
    style = {"display": "flex", "box-sizing": "border-box", **_sizing(node)}
    el = Element("div", {"data-wf-id": structural_id(path), "data-wf-kind": str(kind)}, style)
    box = ctx.tree.boxes.get(path, Box(0, 0, 0, 0))
    local = Box(0.0, 0.0, box.w, box.h)
    if kind in CHART_KINDS:
        el.add(emit_chart_svg(kind, node.props, local))
    elif kind in ComponentKind:
        wrap = kind == ComponentKind.Text and node.width is not None
        el.add(emit_primitive(kind, node.props, local, node.content, ctx.warnings, ctx.icon_dir, wrap))
    else:
        raise UnsupportedKind(f"no emitter for {kind!r}")
    return el


def _node(node: Node, path: str, ctx: "_Ctx") -> Element:
    if isinstance(node, ContainerNode):
        return _container(node, path, ctx)
    if isinstance(node, LeafNode):
        return _leaf(node, path, ctx)
    raise UnsupportedKind(f"cannot emit {type(node).__name__}")


@dataclass
class _Ctx:
    tree: LayoutTree
    warnings: list[str]
    icon_dir: object = None


def default_size(spec: WidgetSpec) -> tuple[float, float]:
    """Minimal non-overflowing size at the widget's aspect ratio."""
    fit = fit_width(spec)
    return fit.w_star, fit.h_star


def build_tree(
    spec: WidgetSpec,
    size: tuple[float, float] | None = None,
    render_size: tuple[float, float] | None = None,
    icon_dir=None,
    warnings: list[str] | None = None,
) -> Element:
    """Element tree for the shell; ``render_size`` rescales the laid-out content."""
    w, h = size if size is not None else default_size(spec)
    tree = solve_layout(spec, (w, h))
    ctx = _Ctx(tree, warnings if warnings is not None else [], icon_dir)
    style = {
        "display": "flex",
        "flex-direction": "column",
        "box-sizing": "border-box",
        "position": "relative",
        "overflow": "hidden",
        "width": px(w),
        "height": px(h),
        "padding": px(spec.padding),
        "background-color": spec.background_color,
        "border-radius": px(spec.border_radius),
        "font-family": FONT_STACK,
    }
    if render_size is not None:
        sx, sy = render_size[0] / w, render_size[1] / h
        if (sx, sy) != (1.0, 1.0):
            style["transform"] = f"scale({sx:.6g}, {sy:.6g})"
            style["transform-origin"] = "0 0"
    shell = Element("div", {"class": "widget", "data-wf-id": "shell", "data-wf-kind": "shell"}, style)
    if spec.root is not None:
        root = _node(spec.root, "root", ctx)
        # the root fills the shell content box unless it has an explicit height
        if spec.root.height is None:
            root.style["flex"] = "1 0 0px"
        shell.add(root)
    return shell


def render_document(shell: Element, target: EmitTarget | str) -> str:
    target = EmitTarget(target)
    if target is EmitTarget.Html:
        body = to_html(shell, depth=1)
        return (
            '<html lang="en">\n'
            "<head>\n"
            '<meta charset="utf-8">\n'
            "<title>Widget</title>\n"
            "<style>html, body { margin: 0; padding: 0; }</style>\n"
            "</head>\n"
            "<body>\n"
            f"{body}\n"
            "</body>\n"
            "</html>"
        )
    body = to_jsx(shell, depth=2)
    return (
        'import React from "react";\n'
        "\n"
        "export default function Widget() {\n"
        "  return (\n"
        f"{body}\n"
        "  );\n"
        "}\n"
    )


def emit(
    spec: WidgetSpec,
    target: EmitTarget | str = EmitTarget.Html,
    size: tuple[float, float] | None = None,
    render_size: tuple[float, float] | None = None,
    icon_dir=None,
    warnings: list[str] | None = None,
) -> str:
    """Source document for one target; byte-identical for identical inputs."""
    shell = build_tree(spec, size, render_size, icon_dir, warnings)
    return render_document(shell, target)


def compile_spec(
    spec: WidgetSpec,
    target: EmitTarget | str = EmitTarget.Html,
    size: tuple[float, float] | None = None,
    render_size: tuple[float, float] | None = None,
    icon_dir=None,
) -> CompileResult:
    warnings: list[str] = []
    size = size if size is not None else default_size(spec)
    source = emit(spec, target, size, render_size, icon_dir, warnings)
    return CompileResult(source, warnings, size, render_size or size)
