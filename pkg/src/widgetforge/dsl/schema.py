"""Component kinds and per-kind prop schemas.

Each prop is declared with a type tag; validation, repair, canonical key
ordering and template slot checking all read from ``PROP_SCHEMAS``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Any


class ComponentKind(str, Enum):
    Text = "Text"
    Icon = "Icon"
    AppLogo = "AppLogo"
    Image = "Image"
    MapImage = "MapImage"
    Button = "Button"
    Checkbox = "Checkbox"
    Switch = "Switch"
    Slider = "Slider"
    Divider = "Divider"
    Indicator = "Indicator"
    ProgressBar = "ProgressBar"
    ProgressRing = "ProgressRing"
    Sparkline = "Sparkline"
    BarChart = "BarChart"
    StackedBarChart = "StackedBarChart"
    LineChart = "LineChart"
    PieChart = "PieChart"
    RadarChart = "RadarChart"

    def __str__(self) -> str:
        return self.value


CHART_KINDS = frozenset(
    {
        ComponentKind.BarChart,
        ComponentKind.StackedBarChart,
        ComponentKind.LineChart,
        ComponentKind.PieChart,
        ComponentKind.RadarChart,
        ComponentKind.Sparkline,
        ComponentKind.ProgressBar,
        ComponentKind.ProgressRing,
    }
)

HEX_RE = re.compile(r"^#(?:[0-9a-fA-F]{3}|[0-9a-fA-F]{4}|[0-9a-fA-F]{6}|[0-9a-fA-F]{8})$")
ICON_RE = re.compile(r"^[a-z][a-z0-9]*:[A-Za-z][A-Za-z0-9]*$")
PERCENT_RE = re.compile(r"^\s*(-?\d+(?:\.\d+)?)\s*%\s*$")
NUMERIC_RE = re.compile(r"^\s*-?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][-+]?\d+)?\s*$")


def is_hex_color(value: Any) -> bool:
    return isinstance(value, str) and HEX_RE.match(value) is not None


def is_number(value: Any) -> bool:
    return (
        isinstance(value, (int, float))
        and not isinstance(value, bool)
        and math.isfinite(value)
    )


def is_numeric_string(value: Any) -> bool:
    return isinstance(value, str) and NUMERIC_RE.match(value) is not None


@dataclass(frozen=True)
class PropType:
    """Type tag for one prop.

    ``tag`` is one of: color, colors, number, size, fraction, weight, string,
    strings, icon, bool, enum, series, series1, series2d, weights.
    """

    tag: str
    choices: tuple[str, ...] = ()
    required: bool = False

    def check(self, value: Any) -> bool:
        tag = self.tag
        if tag == "color":
            return is_hex_color(value)
        if tag == "colors":
            return isinstance(value, list) and len(value) > 0 and all(map(is_hex_color, value))
        if tag == "number":
            return is_number(value)
        if tag == "size":
            return is_number(value) and value >= 0
        if tag == "fraction":
            return is_number(value) and 0 <= value <= 1
        if tag == "weight":
            return is_number(value) and 1 <= value <= 1000
        if tag == "string":
            return isinstance(value, str)
        if tag == "strings":
            return isinstance(value, list) and all(isinstance(v, str) for v in value)
        if tag == "icon":
            return isinstance(value, str) and ICON_RE.match(value) is not None
        if tag == "bool":
            return isinstance(value, bool)
        if tag == "enum":
            return value in self.choices
        if tag == "series":
            return _is_series(value) or _is_series2d(value)
        if tag == "series1":
            return _is_series(value)
        if tag == "series2d":
            return _is_series2d(value)
        if tag == "weights":
            return _is_series(value) and min(value) >= 0 and sum(value) > 0
        raise ValueError(f"unknown prop tag {tag!r}")

    @property
    def numeric(self) -> bool:
        return self.tag in ("number", "size", "fraction", "weight")


def _is_series(value: Any) -> bool:
    return isinstance(value, list) and len(value) > 0 and all(map(is_number, value))


def _is_series2d(value: Any) -> bool:
    return (
        isinstance(value, list)
        and len(value) > 0
        and all(_is_series(row) for row in value)
    )


C = PropType("color")
CS = PropType("colors")
NUM = PropType("number")
SIZE = PropType("size")
FRAC = PropType("fraction")
WEIGHT = PropType("weight")
STR = PropType("string")
STRS = PropType("strings")
ICON = PropType("icon")
BOOL = PropType("bool")


def enum(*choices: str) -> PropType:
    return PropType("enum", tuple(choices))


_AXES = {
    "showAxis": BOOL,
    "showGrid": BOOL,
    "gridColor": C,
    "xAxisLabelColor": C,
    "yAxisLabelColor": C,
    "xAxisLabelFontSize": SIZE,
    "yAxisLabelFontSize": SIZE,
    "yAxisLabelSuffix": STR,
}

# Key order here is the canonical serialization order for props.
PROP_SCHEMAS: dict[ComponentKind, dict[str, PropType]] = {
    ComponentKind.Text: {
        "fontSize": SIZE,
        "fontWeight": WEIGHT,
        "color": C,
        "align": enum("left", "center", "right"),
    },
    ComponentKind.Icon: {"name": ICON, "size": SIZE, "color": C},
    ComponentKind.AppLogo: {
        "icon": ICON,
        "name": PropType("string", required=True),
        "size": SIZE,
        "backgroundColor": C,
    },
    ComponentKind.Image: {"src": STR, "fit": enum("cover", "contain", "fill"), "borderRadius": SIZE},
    ComponentKind.MapImage: {"src": STR, "borderRadius": SIZE},
    ComponentKind.Button: {
        "icon": ICON,
        "content": STR,
        "backgroundColor": C,
        "color": C,
        "borderRadius": SIZE,
        "fontSize": SIZE,
        "fontWeight": WEIGHT,
        "padding": SIZE,
        "shape": enum("rounded", "circle"),
        "size": SIZE,
    },
    ComponentKind.Checkbox: {"checked": BOOL, "color": C, "size": SIZE},
    ComponentKind.Switch: {"on": BOOL, "color": C, "trackColor": C},
    ComponentKind.Slider: {"value": FRAC, "color": C, "trackColor": C},
    ComponentKind.Divider: {"color": C, "thickness": SIZE, "orientation": enum("horizontal", "vertical")},
    ComponentKind.Indicator: {"color": C, "thickness": SIZE},
    ComponentKind.ProgressBar: {"value": FRAC, "color": C, "trackColor": C, "thickness": SIZE},
    ComponentKind.ProgressRing: {
        "value": FRAC,
        "color": C,
        "trackColor": C,
        "thickness": SIZE,
        "size": SIZE,
    },
    ComponentKind.Sparkline: {
        "data": PropType("series1", required=True),
        "color": C,
        "strokeWidth": SIZE,
        "fill": BOOL,
    },
    ComponentKind.BarChart: {
        "data": PropType("series", required=True),
        "labels": STRS,
        "color": C,
        "colors": CS,
        "min": NUM,
        "max": NUM,
        "orientation": enum("vertical", "horizontal"),
        "title": STR,
        "showTitle": BOOL,
        "showValues": BOOL,
        "barRadius": SIZE,
        "backgroundColor": C,
        **_AXES,
    },
    ComponentKind.StackedBarChart: {
        "data": PropType("series2d", required=True),
        "labels": STRS,
        "colors": CS,
        "max": NUM,
        "barRadius": SIZE,
        "backgroundColor": C,
        **_AXES,
    },
    ComponentKind.LineChart: {
        "data": PropType("series", required=True),
        "labels": STRS,
        "color": C,
        "colors": CS,
        "min": NUM,
        "max": NUM,
        "strokeWidth": SIZE,
        "fill": BOOL,
        "backgroundColor": C,
        **_AXES,
    },
    ComponentKind.PieChart: {
        "data": PropType("weights", required=True),
        "labels": STRS,
        "colors": CS,
        "innerRadius": FRAC,
    },
    ComponentKind.RadarChart: {
        "data": PropType("series1", required=True),
        "labels": STRS,
        "max": NUM,
        "color": C,
        "gridColor": C,
    },
}


def kind_of(name: Any) -> ComponentKind | None:
    try:
        return ComponentKind(name)
    except ValueError:
        return None
