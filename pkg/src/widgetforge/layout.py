"""Single-pass flexbox layout and the overflow measurements behind Ψ(w).

Boxes are kept in real arithmetic. Text uses a closed-form metric model:
``width = 0.6 * fontSize * graphemes`` and ``height = 1.2 * fontSize``;
lines wrap at spaces only when the Text node has an explicit width.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import regex

from .dsl.model import LeafNode, Node, WidgetSpec, child_path, structural_id
from .dsl.schema import PERCENT_RE, ComponentKind
from .errors import DegenerateViewport

CHAR_WIDTH = 0.6
LINE_HEIGHT = 1.2
DEFAULT_FONT_SIZE = 14

# sub-picometre noise from real arithmetic is not overflow
EXCESS_TOL = 1e-9

_FIXED_SIZES = {
    ComponentKind.Image: (48, 48),
    ComponentKind.MapImage: (48, 48),
    ComponentKind.Switch: (51, 31),
    ComponentKind.Slider: (100, 20),
    ComponentKind.Sparkline: (80, 24),
    ComponentKind.BarChart: (160, 100),
    ComponentKind.StackedBarChart: (160, 100),
    ComponentKind.LineChart: (160, 100),
    ComponentKind.PieChart: (100, 100),
    ComponentKind.RadarChart: (120, 120),
}


@dataclass(frozen=True)
class Box:
    x: float
    y: float
    w: float
    h: float

    @property
    def right(self) -> float:
        return self.x + self.w

    @property
    def bottom(self) -> float:
        return self.y + self.h

    def scaled(self, sx: float, sy: float) -> "Box":
        return Box(self.x * sx, self.y * sy, self.w * sx, self.h * sy)


@dataclass
class LayoutTree:
    viewport: tuple[float, float]
    shell_padding: float
    boxes: dict[str, Box] = field(default_factory=dict)
    # leaf ink extents: the layout box grown to the leaf's intrinsic size
    ink: dict[str, Box] = field(default_factory=dict)
    kinds: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class LayoutReport:
    C_w: float
    C_h: float
    V_w: float
    V_h: float
    deltas: tuple[float, ...]


def grapheme_count(text: str) -> int:
    return len(regex.findall(r"\X", text))


def text_size(text: str, font_size: float) -> tuple[float, float]:
    return CHAR_WIDTH * font_size * grapheme_count(text), LINE_HEIGHT * font_size


def wrap_lines(text: str, font_size: float, width: float) -> list[str]:
    """Greedy wrap at spaces; a single overlong word stays on its own line."""
    lines: list[str] = []
    current = ""
    for word in text.split(" "):
        candidate = word if not current else f"{current} {word}"
        if current and text_size(candidate, font_size)[0] > width:
            lines.append(current)
            current = word
        else:
            current = candidate
    lines.append(current)
    return lines


def resolve_dimension(value, basis: float | None) -> float | None:
    """px numbers pass through; percents resolve against ``basis`` when known."""
    if value is None:
        return None
    if isinstance(value, str):
        m = PERCENT_RE.match(value)
        if m is None or basis is None:
            return None
        return float(m.group(1)) / 100.0 * basis
    return float(value)


def _intrinsic_leaf(leaf: LeafNode) -> tuple[float, float]:
    kind = leaf.component
    p = leaf.props
    if kind == ComponentKind.Text:
        return text_size(leaf.content or "", p.get("fontSize", DEFAULT_FONT_SIZE))
    if kind == ComponentKind.Icon:
        s = p.get("size", 24)
        return s, s
    if kind == ComponentKind.AppLogo:
        s = p.get("size", 40)
        return s, s
    if kind == ComponentKind.Checkbox:
        s = p.get("size", 20)
        return s, s
    if kind == ComponentKind.ProgressRing:
        s = p.get("size", 48)
        return s, s
    if kind == ComponentKind.Button:
        if "size" in p:
            return p["size"], p["size"]
        fs = p.get("fontSize", DEFAULT_FONT_SIZE)
        pad = p.get("padding", 8)
        if "icon" in p:
            w = h = LINE_HEIGHT * fs
        else:
            w, h = text_size(p.get("content", ""), fs)
        return w + 2 * pad, h + 2 * pad
    if kind == ComponentKind.Divider:
        t = p.get("thickness", 1)
        return (t, 0) if p.get("orientation") == "vertical" else (0, t)
    if kind == ComponentKind.Indicator:
        return p.get("thickness", 4), 16
    if kind == ComponentKind.ProgressBar:
        return 100, p.get("thickness", 6)
    return _FIXED_SIZES[kind]


def measure_leaf(leaf: LeafNode, available: tuple[float, float] | None = None) -> tuple[float, float]:
    """Intrinsic (w, h) of a leaf; explicit node width/height win."""
    basis_w, basis_h = available if available is not None else (None, None)
    width = resolve_dimension(leaf.width, basis_w)
    height = resolve_dimension(leaf.height, basis_h)
    iw, ih = _intrinsic_leaf(leaf)
    if leaf.component == ComponentKind.Text and width is not None and leaf.content:
        fs = leaf.props.get("fontSize", DEFAULT_FONT_SIZE)
        lines = wrap_lines(leaf.content, fs, width)
        ih = LINE_HEIGHT * fs * len(lines)
    return (iw if width is None else width), (ih if height is None else height)


def intrinsic_size(node: Node) -> tuple[float, float]:
    """Unconstrained content size; percent dimensions cannot resolve and fall back."""
    if isinstance(node, LeafNode):
        return measure_leaf(node)
    sizes = [intrinsic_size(c) for c in node.children]
    gaps = node.gap * max(len(sizes) - 1, 0)
    if node.direction == "row":
        w = sum(s[0] for s in sizes) + gaps
        h = max((s[1] for s in sizes), default=0)
    else:
        w = max((s[0] for s in sizes), default=0)
        h = sum(s[1] for s in sizes) + gaps
    w += 2 * node.padding
    h += 2 * node.padding
    ew = resolve_dimension(node.width, None)
    eh = resolve_dimension(node.height, None)
    return (w if ew is None else ew), (h if eh is None else eh)


def natural_width(spec: WidgetSpec) -> float:
    """Shell width needed by the root's content at unconstrained layout."""
    if spec.root is None:
        return 2 * spec.padding
    return intrinsic_size(spec.root)[0] + 2 * spec.padding


def _layout(node: Node, box: Box, path: str, tree: LayoutTree) -> None:
    tree.boxes[path] = box
    if isinstance(node, LeafNode):
        tree.kinds[path] = str(node.component)
        iw, ih = measure_leaf(node, (box.w, box.h))
        tree.ink[path] = Box(box.x, box.y, max(box.w, iw), max(box.h, ih))
        return
    tree.kinds[path] = "container"
    pad = node.padding
    inner = Box(box.x + pad, box.y + pad, max(box.w - 2 * pad, 0.0), max(box.h - 2 * pad, 0.0))
    row = node.direction == "row"
    inner_main, inner_cross = (inner.w, inner.h) if row else (inner.h, inner.w)

    mains: list[float | None] = []
    weights: list[float] = []
    for child in node.children:
        explicit = resolve_dimension(child.width if row else child.height, inner_main)
        weight = child.flex or 0.0
        if explicit is not None:
            mains.append(explicit)
            weights.append(0.0)
        elif weight > 0:
            mains.append(None)
            weights.append(weight)
        else:
            iw, ih = intrinsic_size(child)
            mains.append(iw if row else ih)
            weights.append(0.0)

    gaps = node.gap * max(len(node.children) - 1, 0)
    fixed = sum(m for m in mains if m is not None)
    free = max(inner_main - gaps - fixed, 0.0)
    total_weight = sum(weights)

    cursor = inner.x if row else inner.y
    for i, child in enumerate(node.children):
        main = mains[i] if mains[i] is not None else free * weights[i] / total_weight
        cross = resolve_dimension(child.height if row else child.width, inner_cross)
        if cross is None:
            cross = inner_cross
        if row:
            child_box = Box(cursor, inner.y, main, cross)
        else:
            child_box = Box(inner.x, cursor, cross, main)
        _layout(child, child_box, child_path(path, i), tree)
        cursor += main + node.gap


def solve_layout(spec: WidgetSpec, viewport: tuple[float, float]) -> LayoutTree:
    """Resolve every node to a pixel box at the given shell size."""
    vw, vh = viewport
    if not (vw > 0 and vh > 0) or not (math.isfinite(vw) and math.isfinite(vh)):
        raise DegenerateViewport(f"viewport {viewport!r} must be positive and finite")
    tree = LayoutTree(viewport=(float(vw), float(vh)), shell_padding=spec.padding)
    tree.boxes["shell"] = Box(0.0, 0.0, float(vw), float(vh))
    tree.kinds["shell"] = "shell"
    if spec.root is None:
        return tree
    p = spec.padding
    content = Box(p, p, max(vw - 2 * p, 0.0), max(vh - 2 * p, 0.0))
    root = spec.root
    rw = resolve_dimension(root.width, content.w)
    rh = resolve_dimension(root.height, content.h)
    root_box = Box(content.x, content.y, content.w if rw is None else rw, content.h if rh is None else rh)
    _layout(root, root_box, "root", tree)
    return tree


def extent_box(tree: LayoutTree, path: str) -> Box:
    return tree.ink.get(path, tree.boxes[path])


def layout_report(tree: LayoutTree) -> LayoutReport:
    """Content extents over the root's descendants and per-node boundary excess.

    Excess is measured against the shell's content box (inside its padding)
    and normalized by the viewport extent on that axis.
    """
    vw, vh = tree.viewport
    p = tree.shell_padding
    c_w = c_h = 0.0
    deltas = []
    for path in tree.boxes:
        if path == "shell":
            continue
        b = extent_box(tree, path)
        if path != "root":
            c_w = max(c_w, b.right)
            c_h = max(c_h, b.bottom)
        horiz = max(p - b.x, b.right - (vw - p))
        vert = max(p - b.y, b.bottom - (vh - p))
        horiz = horiz if horiz > EXCESS_TOL else 0.0
        vert = vert if vert > EXCESS_TOL else 0.0
        deltas.append(max(horiz / vw, vert / vh))
    return LayoutReport(C_w=c_w, C_h=c_h, V_w=vw, V_h=vh, deltas=tuple(deltas))


def _ratio_excess(content: float, viewport: float) -> float:
    # content flush with the viewport edge up to rounding is not overflow
    if abs(content - viewport) <= EXCESS_TOL:
        return 0.0
    return content / viewport - 1.0


def violation(report: LayoutReport) -> float:
    """Ψ = max(C_w/V_w - 1, C_h/V_h - 1, max_i Δ_i); Ψ <= 0 means fully contained."""
    terms = [_ratio_excess(report.C_w, report.V_w), _ratio_excess(report.C_h, report.V_h)]
    if report.deltas:
        terms.append(max(report.deltas))
    return max(terms)


def psi(spec: WidgetSpec, viewport: tuple[float, float]) -> float:
    return violation(layout_report(solve_layout(spec, viewport)))


def layout_to_json(tree: LayoutTree, report: LayoutReport | None = None, ndigits: int = 3) -> dict:
    report = report or layout_report(tree)
    boxes = [
        {
            "path": path,
            "id": structural_id(path),
            "kind": tree.kinds[path],
            "x": round(b.x, ndigits),
            "y": round(b.y, ndigits),
            "w": round(b.w, ndigits),
            "h": round(b.h, ndigits),
        }
        for path, b in tree.boxes.items()
    ]
    return {
        "boxes": boxes,
        "C_w": round(report.C_w, ndigits),
        "C_h": round(report.C_h, ndigits),
        "V_w": round(report.V_w, ndigits),
        "V_h": round(report.V_h, ndigits),
        "psi": round(violation(report), 9),
    }
