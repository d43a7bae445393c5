"""Deterministic inline-SVG charts.

All geometry is computed in the leaf's own box (origin at 0,0). Bars and
line points are linear in the data over the auto-ranged value axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..dsl.schema import ComponentKind
from ..errors import EmptyData, UnsupportedKind
from ..layout import Box
from .elements import Element, fmt

DEFAULT_COLORS = ("#007aff", "#34c759", "#ff9500", "#ff3b30", "#af52de", "#5ac8fa", "#ffcc00", "#8e8e93")
DEFAULT_GRID = "#e5e5ea"
DEFAULT_LABEL = "#8e8e93"
GRID_STEPS = 4


@dataclass(frozen=True)
class AxisRange:
    min: float
    max: float

    @property
    def span(self) -> float:
        return self.max - self.min


def _nice_up(v: float) -> float:
    m = 10.0 ** math.floor(math.log10(v))
    # round away float noise such as 1.1 * 65 = 71.50000000000001
    return math.ceil(round(v / m, 9)) * m


def axis_autorange(values) -> AxisRange:
    """Zero-based axis padded by 10% and rounded to one significant digit.

    >>> axis_autorange([10, 65]).max
    80.0
    """
    vals = [float(v) for v in values]
    if not vals:
        raise EmptyData("axis_autorange needs at least one value")
    if not all(math.isfinite(v) for v in vals):
        raise ValueError("axis values must be finite")
    hi, lo = max(vals), min(vals)
    top = _nice_up(1.1 * hi) if hi > 0 else 0.0
    bottom = 0.0 if lo >= 0 else -_nice_up(-1.1 * lo)
    if top == bottom:
        top = bottom + 1.0
    return AxisRange(bottom, top)


def _flatten(data) -> list[float]:
    if data and isinstance(data[0], list):
        return [v for row in data for v in row]
    return list(data)


def _rows(data) -> list[list[float]]:
    """Series as rows; a flat list is one series."""
    if data and isinstance(data[0], list):
        return [list(r) for r in data]
    return [list(data)]


def _palette(props: dict, n: int) -> list[str]:
    colors = props.get("colors")
    if colors:
        base = list(colors)
    elif props.get("color"):
        base = [props["color"]] + [c for c in DEFAULT_COLORS if c != props["color"]]
    else:
        base = list(DEFAULT_COLORS)
    return [base[i % len(base)] for i in range(n)]


def _axis(props: dict, values: list[float]) -> AxisRange:
    rng = axis_autorange(values)
    lo = props.get("min", rng.min)
    hi = props.get("max", rng.max)
    if hi <= lo:
        hi = lo + 1.0
    return AxisRange(float(lo), float(hi))


def _svg(box: Box, kind: ComponentKind) -> Element:
    return Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": fmt(box.w),
            "height": fmt(box.h),
            "viewBox": f"0 0 {fmt(box.w)} {fmt(box.h)}",
            "data-chart": str(kind),
        },
        {"display": "block"},
    )


def _text(x: float, y: float, label: str, size: float, color: str, anchor: str) -> Element:
    return Element(
        "text",
        {
            "x": fmt(x),
            "y": fmt(y),
            "font-size": fmt(size),
            "fill": color,
            "text-anchor": anchor,
            "class": "wf-label",
        },
        children=[label],
    )


def plot_area(kind: ComponentKind, props: dict, box: Box, ticks: list[str] | None = None) -> Box:
    """Inner rectangle holding the data marks after axis gutters."""
    if not props.get("showAxis", True):
        top = 1.2 * 13 + 4 if props.get("showTitle") and props.get("title") else 4.0
        return Box(4.0, top, max(box.w - 8.0, 1.0), max(box.h - top - 4.0, 1.0))
    yfs = props.get("yAxisLabelFontSize", 10)
    xfs = props.get("xAxisLabelFontSize", 10)
    widest = max((len(t) for t in ticks or []), default=0)
    left = 0.6 * yfs * widest + 6
    top = 1.2 * 13 + 4 if props.get("showTitle") and props.get("title") else 0.6 * yfs + 2
    bottom = 1.2 * xfs + 4 if props.get("labels") else 4.0
    return Box(left, top, max(box.w - left - 4.0, 1.0), max(box.h - top - bottom, 1.0))


def _tick_labels(rng: AxisRange, suffix: str) -> list[str]:
    return [fmt(rng.min + rng.span * i / GRID_STEPS) + suffix for i in range(GRID_STEPS + 1)]


def _axes(svg: Element, props: dict, plot: Box, rng: AxisRange, horizontal: bool = False) -> None:
    show_axis = props.get("showAxis", True)
    if props.get("showGrid", True):
        grid = props.get("gridColor", DEFAULT_GRID)
        for i in range(GRID_STEPS + 1):
            t = i / GRID_STEPS
            if horizontal:
                x = plot.x + t * plot.w
                line = {"x1": fmt(x), "y1": fmt(plot.y), "x2": fmt(x), "y2": fmt(plot.bottom)}
            else:
                y = plot.bottom - t * plot.h
                line = {"x1": fmt(plot.x), "y1": fmt(y), "x2": fmt(plot.right), "y2": fmt(y)}
            svg.add(Element("line", {**line, "stroke": grid, "stroke-width": "1", "class": "wf-grid"}))
    if not show_axis:
        return
    yfs = props.get("yAxisLabelFontSize", 10)
    color = props.get("yAxisLabelColor", DEFAULT_LABEL)
    for i, label in enumerate(_tick_labels(rng, props.get("yAxisLabelSuffix", ""))):
        t = i / GRID_STEPS
        if horizontal:
            svg.add(_text(plot.x + t * plot.w, plot.bottom + 1.2 * yfs, label, yfs, color, "middle"))
        else:
            svg.add(_text(plot.x - 4, plot.bottom - t * plot.h + 0.35 * yfs, label, yfs, color, "end"))


def _category_labels(svg: Element, props: dict, plot: Box, n: int, horizontal: bool = False) -> None:
    labels = props.get("labels") or []
    if not labels or not props.get("showAxis", True):
        return
    xfs = props.get("xAxisLabelFontSize", 10)
    color = props.get("xAxisLabelColor", DEFAULT_LABEL)
    slot = (plot.h if horizontal else plot.w) / n
    for i, label in enumerate(labels[:n]):
        c = (i + 0.5) * slot
        if horizontal:
            svg.add(_text(plot.x - 4, plot.y + c + 0.35 * xfs, label, xfs, color, "end"))
        else:
            svg.add(_text(plot.x + c, plot.bottom + 1.2 * xfs, label, xfs, color, "middle"))


def _title(svg: Element, props: dict, box: Box) -> None:
    if props.get("showTitle") and props.get("title"):
        svg.add(_text(box.w / 2, 13, props["title"], 13, props.get("yAxisLabelColor", "#1c1c1e"), "middle"))


def _bar_chart(props: dict, box: Box) -> Element:
    rows = _rows(props["data"])
    rng = _axis(props, _flatten(props["data"]))
    horizontal = props.get("orientation") == "horizontal"
    svg = _svg(box, ComponentKind.BarChart)
    plot = plot_area(ComponentKind.BarChart, props, box, _tick_labels(rng, props.get("yAxisLabelSuffix", "")))
    svg.attrs["data-plot"] = " ".join(fmt(v) for v in (plot.x, plot.y, plot.w, plot.h))
    svg.attrs["data-axis"] = f"{fmt(rng.min)} {fmt(rng.max)}"
    if "backgroundColor" in props:
        svg.add(Element("rect", {"x": "0", "y": "0", "width": fmt(box.w), "height": fmt(box.h), "fill": props["backgroundColor"]}))
    _title(svg, props, box)
    _axes(svg, props, plot, rng, horizontal)

    n_cat = max(len(r) for r in rows)
    colors = _palette(props, len(rows) if len(rows) > 1 else n_cat)
    extent = plot.h if not horizontal else plot.w
    slot = (plot.w if not horizontal else plot.h) / n_cat
    group = 0.6 * slot
    thick = group / len(rows)
    zero = (0.0 - rng.min) / rng.span * extent  # distance of the zero line from the axis origin
    radius = fmt(props.get("barRadius", 2))
    for s, row in enumerate(rows):
        for i, v in enumerate(row):
            length = abs(v) / rng.span * extent
            offset = i * slot + (slot - group) / 2 + s * thick
            start = zero if v >= 0 else zero - length
            if horizontal:
                x, y, w, h = plot.x + start, plot.y + offset, length, thick
            else:
                x, y, w, h = plot.x + offset, plot.bottom - start - length, thick, length
            color = colors[s] if len(rows) > 1 else colors[i]
            if "color" in props and "colors" not in props and len(rows) == 1:
                color = props["color"]
            svg.add(
                Element(
                    "rect",
                    {
                        "class": "wf-bar",
                        "x": fmt(x),
                        "y": fmt(y),
                        "width": fmt(w),
                        "height": fmt(h),
                        "rx": radius,
                        "fill": color,
                        "data-value": fmt(v),
                    },
                )
            )
            if props.get("showValues"):
                svg.add(_text(x + w / 2, y - 2, fmt(v), 9, DEFAULT_LABEL, "middle"))
    _category_labels(svg, props, plot, n_cat, horizontal)
    return svg


def _stacked_chart(props: dict, box: Box) -> Element:
    rows = _rows(props["data"])
    n_cat = max(len(r) for r in rows)
    totals = [sum(max(r[i], 0.0) for r in rows if i < len(r)) for i in range(n_cat)]
    rng = _axis(props, totals)
    svg = _svg(box, ComponentKind.StackedBarChart)
    plot = plot_area(ComponentKind.StackedBarChart, props, box, _tick_labels(rng, props.get("yAxisLabelSuffix", "")))
    svg.attrs["data-plot"] = " ".join(fmt(v) for v in (plot.x, plot.y, plot.w, plot.h))
    svg.attrs["data-axis"] = f"{fmt(rng.min)} {fmt(rng.max)}"
    if "backgroundColor" in props:
        svg.add(Element("rect", {"x": "0", "y": "0", "width": fmt(box.w), "height": fmt(box.h), "fill": props["backgroundColor"]}))
    _axes(svg, props, plot, rng)
    colors = _palette(props, len(rows))
    slot = plot.w / n_cat
    bw = 0.6 * slot
    for i in range(n_cat):
        acc = 0.0
        for s, row in enumerate(rows):
            v = max(row[i], 0.0) if i < len(row) else 0.0
            h = v / rng.span * plot.h
            y = plot.bottom - (acc - rng.min) / rng.span * plot.h - h
            acc += v
            svg.add(
                Element(
                    "rect",
                    {
                        "class": "wf-bar",
                        "x": fmt(plot.x + i * slot + (slot - bw) / 2),
                        "y": fmt(y),
                        "width": fmt(bw),
                        "height": fmt(h),
                        "rx": fmt(props.get("barRadius", 0)),
                        "fill": colors[s],
                        "data-value": fmt(v),
                        "data-series": str(s),
                    },
                )
            )
    _category_labels(svg, props, plot, n_cat)
    return svg


def _line_points(row: list[float], plot: Box, rng: AxisRange) -> list[tuple[float, float]]:
    n = len(row)
    pts = []
    for i, v in enumerate(row):
        x = plot.x + (plot.w / 2 if n == 1 else plot.w * i / (n - 1))
        y = plot.bottom - (v - rng.min) / rng.span * plot.h
        pts.append((x, y))
    return pts


def _points_attr(pts) -> str:
    return " ".join(f"{fmt(x)},{fmt(y)}" for x, y in pts)


def _line_chart(props: dict, box: Box) -> Element:
    rows = _rows(props["data"])
    rng = _axis(props, _flatten(props["data"]))
    svg = _svg(box, ComponentKind.LineChart)
    plot = plot_area(ComponentKind.LineChart, props, box, _tick_labels(rng, props.get("yAxisLabelSuffix", "")))
    svg.attrs["data-plot"] = " ".join(fmt(v) for v in (plot.x, plot.y, plot.w, plot.h))
    svg.attrs["data-axis"] = f"{fmt(rng.min)} {fmt(rng.max)}"
    if "backgroundColor" in props:
        svg.add(Element("rect", {"x": "0", "y": "0", "width": fmt(box.w), "height": fmt(box.h), "fill": props["backgroundColor"]}))
    _axes(svg, props, plot, rng)
    colors = _palette(props, len(rows))
    sw = fmt(props.get("strokeWidth", 2))
    for s, row in enumerate(rows):
        pts = _line_points(row, plot, rng)
        if props.get("fill"):
            area = [(pts[0][0], plot.bottom), *pts, (pts[-1][0], plot.bottom)]
            svg.add(Element("polygon", {"class": "wf-area", "points": _points_attr(area), "fill": colors[s], "fill-opacity": "0.2"}))
        svg.add(
            Element(
                "polyline",
                {
                    "class": "wf-line",
                    "points": _points_attr(pts),
                    "fill": "none",
                    "stroke": colors[s],
                    "stroke-width": sw,
                    "stroke-linejoin": "round",
                    "stroke-linecap": "round",
                },
            )
        )
    _category_labels(svg, props, plot, max(len(r) for r in rows))
    return svg


def _sparkline(props: dict, box: Box) -> Element:
    data = [float(v) for v in props["data"]]
    sw = props.get("strokeWidth", 2)
    color = props.get("color", DEFAULT_COLORS[0])
    inset = sw / 2
    plot = Box(inset, inset, max(box.w - sw, 0.0), max(box.h - sw, 0.0))
    lo, hi = min(data), max(data)
    if hi == lo:
        rng = AxisRange(lo - 1.0, hi + 1.0)
    else:
        rng = AxisRange(lo, hi)
    pts = _line_points(data, plot, rng)
    svg = _svg(box, ComponentKind.Sparkline)
    if props.get("fill"):
        area = [(pts[0][0], box.h), *pts, (pts[-1][0], box.h)]
        svg.add(Element("polygon", {"class": "wf-area", "points": _points_attr(area), "fill": color, "fill-opacity": "0.2"}))
    svg.add(
        Element(
            "polyline",
            {
                "class": "wf-line",
                "points": _points_attr(pts),
                "fill": "none",
                "stroke": color,
                "stroke-width": fmt(sw),
                "stroke-linejoin": "round",
                "stroke-linecap": "round",
            },
        )
    )
    return svg


def _polar(cx: float, cy: float, r: float, deg: float) -> tuple[float, float]:
    # 0 degrees at 12 o'clock, clockwise
    rad = math.radians(deg - 90.0)
    return cx + r * math.cos(rad), cy + r * math.sin(rad)


def _wedge_path(cx, cy, r, r_in, a0, a1) -> str:
    large = 1 if a1 - a0 > 180 else 0
    x0, y0 = _polar(cx, cy, r, a0)
    x1, y1 = _polar(cx, cy, r, a1)
    if r_in <= 0:
        return f"M {fmt(cx)} {fmt(cy)} L {fmt(x0)} {fmt(y0)} A {fmt(r)} {fmt(r)} 0 {large} 1 {fmt(x1)} {fmt(y1)} Z"
    ix0, iy0 = _polar(cx, cy, r_in, a0)
    ix1, iy1 = _polar(cx, cy, r_in, a1)
    return (
        f"M {fmt(x0)} {fmt(y0)} A {fmt(r)} {fmt(r)} 0 {large} 1 {fmt(x1)} {fmt(y1)} "
        f"L {fmt(ix1)} {fmt(iy1)} A {fmt(r_in)} {fmt(r_in)} 0 {large} 0 {fmt(ix0)} {fmt(iy0)} Z"
    )


def _pie_chart(props: dict, box: Box) -> Element:
    data = [float(v) for v in props["data"]]
    total = sum(data)
    svg = _svg(box, ComponentKind.PieChart)
    cx, cy = box.w / 2, box.h / 2
    r = max(min(box.w, box.h) / 2 - 1, 0.0)
    r_in = r * props.get("innerRadius", 0.0)
    colors = _palette(props, len(data))
    angle = 0.0
    for i, v in enumerate(data):
        sweep = 360.0 * v / total
        attrs = {"class": "wf-wedge", "fill": colors[i], "data-value": fmt(v), "data-sweep": fmt(sweep)}
        if sweep >= 360.0 - 1e-9:
            # a single full wedge cannot be drawn as one arc
            if r_in > 0:
                svg.add(Element("circle", {**attrs, "cx": fmt(cx), "cy": fmt(cy), "r": fmt((r + r_in) / 2),
                                           "fill": "none", "stroke": colors[i], "stroke-width": fmt(r - r_in)}))
            else:
                svg.add(Element("circle", {**attrs, "cx": fmt(cx), "cy": fmt(cy), "r": fmt(r)}))
        elif sweep > 0:
            svg.add(Element("path", {**attrs, "d": _wedge_path(cx, cy, r, r_in, angle, angle + sweep)}))
        angle += sweep
    return svg


def _radar_chart(props: dict, box: Box) -> Element:
    data = [float(v) for v in props["data"]]
    n = len(data)
    top = props.get("max", axis_autorange(data).max)
    top = top if top > 0 else 1.0
    svg = _svg(box, ComponentKind.RadarChart)
    labels = props.get("labels") or []
    margin = 14.0 if labels else 2.0
    cx, cy = box.w / 2, box.h / 2
    r = max(min(box.w, box.h) / 2 - margin, 0.0)
    grid = props.get("gridColor", DEFAULT_GRID)
    step = 360.0 / n
    for level in range(1, GRID_STEPS + 1):
        ring = [_polar(cx, cy, r * level / GRID_STEPS, i * step) for i in range(n)]
        svg.add(Element("polygon", {"class": "wf-grid", "points": _points_attr(ring), "fill": "none", "stroke": grid, "stroke-width": "1"}))
    for i in range(n):
        x, y = _polar(cx, cy, r, i * step)
        svg.add(Element("line", {"class": "wf-grid", "x1": fmt(cx), "y1": fmt(cy), "x2": fmt(x), "y2": fmt(y), "stroke": grid, "stroke-width": "1"}))
    color = props.get("color", DEFAULT_COLORS[0])
    pts = [_polar(cx, cy, r * min(max(v / top, 0.0), 1.0), i * step) for i, v in enumerate(data)]
    svg.add(Element("polygon", {"class": "wf-area", "points": _points_attr(pts), "fill": color, "fill-opacity": "0.3", "stroke": color, "stroke-width": "2"}))
    for i, label in enumerate(labels[:n]):
        x, y = _polar(cx, cy, r + 8, i * step)
        svg.add(_text(x, y + 3, label, 9, DEFAULT_LABEL, "middle"))
    return svg


def _progress_bar(props: dict, box: Box) -> Element:
    value = props.get("value", 0.0)
    h = box.h
    svg = _svg(box, ComponentKind.ProgressBar)
    common = {"x": "0", "y": "0", "height": fmt(h), "rx": fmt(h / 2)}
    svg.add(Element("rect", {"class": "wf-track", **common, "width": fmt(box.w), "fill": props.get("trackColor", DEFAULT_GRID)}))
    svg.add(Element("rect", {"class": "wf-progress", **common, "width": fmt(box.w * value),
                             "fill": props.get("color", DEFAULT_COLORS[0]), "data-value": fmt(value)}))
    return svg


def _progress_ring(props: dict, box: Box) -> Element:
    value = props.get("value", 0.0)
    t = props.get("thickness", 6)
    cx, cy = box.w / 2, box.h / 2
    r = max(min(box.w, box.h) / 2 - t / 2, 0.0)
    circ = 2 * math.pi * r
    svg = _svg(box, ComponentKind.ProgressRing)
    base = {"cx": fmt(cx), "cy": fmt(cy), "r": fmt(r), "fill": "none", "stroke-width": fmt(t)}
    svg.add(Element("circle", {"class": "wf-track", **base, "stroke": props.get("trackColor", DEFAULT_GRID)}))
    svg.add(
        Element(
            "circle",
            {
                "class": "wf-progress",
                **base,
                "stroke": props.get("color", DEFAULT_COLORS[0]),
                "stroke-linecap": "round" if value > 0 else "butt",
                "stroke-dasharray": f"{fmt(circ * value)} {fmt(circ)}",
                "transform": f"rotate(-90 {fmt(cx)} {fmt(cy)})",
                "data-value": fmt(value),
            },
        )
    )
    return svg


_RENDERERS = {
    ComponentKind.BarChart: _bar_chart,
    ComponentKind.StackedBarChart: _stacked_chart,
    ComponentKind.LineChart: _line_chart,
    ComponentKind.Sparkline: _sparkline,
    ComponentKind.PieChart: _pie_chart,
    ComponentKind.RadarChart: _radar_chart,
    ComponentKind.ProgressBar: _progress_bar,
    ComponentKind.ProgressRing: _progress_ring,
}

_NEEDS_DATA = {ComponentKind.BarChart, ComponentKind.StackedBarChart, ComponentKind.LineChart,
               ComponentKind.Sparkline, ComponentKind.PieChart, ComponentKind.RadarChart}


def emit_chart_svg(kind: ComponentKind | str, props: dict, box: Box) -> Element:
    kind = ComponentKind(kind)
    if kind not in _RENDERERS:
        raise UnsupportedKind(f"{kind} is not a chart kind")
    if kind in _NEEDS_DATA:
        data = props.get("data")
        if not data or (isinstance(data[0], list) and not all(data)):
            raise EmptyData(f"{kind}: data must be non-empty")
    if kind == ComponentKind.PieChart and sum(props["data"]) <= 0:
        raise EmptyData("PieChart: weights must sum to a positive value")
    return _RENDERERS[kind](props, box)
