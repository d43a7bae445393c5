"""Markup for non-chart leaves (text, icons, logos, controls, media)."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from functools import lru_cache
from pathlib import Path

from ..dsl.schema import ComponentKind
from ..errors import UnsupportedKind
from ..layout import DEFAULT_FONT_SIZE, LINE_HEIGHT, Box
from .elements import Element, fmt, px

ICON_DIR = Path(__file__).resolve().parent.parent / "icons_data"
LOGO_RADIUS = 0.22
DEFAULT_ACCENT = "#007aff"
DEFAULT_TRACK = "#e5e5ea"
DEFAULT_TEXT = "#000000"


def _strip_ns(tag: str) -> str:
    return tag.split("}", 1)[1] if "}" in tag else tag


def _from_xml(node: ET.Element) -> Element:
    attrs = {_strip_ns(k): v for k, v in node.attrib.items() if "}" not in k or k.endswith("}href")}
    el = Element(_strip_ns(node.tag), attrs)
    for child in node:
        el.add(_from_xml(child))
    return el


@lru_cache(maxsize=512)
def _load_svg(path: str) -> Element | None:
    try:
        root = ET.parse(path).getroot()
    except (OSError, ET.ParseError):
        return None
    if _strip_ns(root.tag) != "svg":
        return None
    return _from_xml(root)


def _copy(el: Element) -> Element:
    return Element(el.tag, dict(el.attrs), dict(el.style), [_copy(c) if isinstance(c, Element) else c for c in el.children])


def resolve_icon(name: str, icon_dir: Path | str | None = None) -> Element | None:
    """``prefix:Name`` -> parsed SVG from ``<icon_dir>/<prefix>/<Name>.svg``."""
    if ":" not in name:
        return None
    prefix, stem = name.split(":", 1)
    base = Path(icon_dir) if icon_dir is not None else ICON_DIR
    path = base / prefix / f"{stem}.svg"
    if not path.is_file():
        return None
    svg = _load_svg(str(path))
    return _copy(svg) if svg is not None else None


def placeholder_icon() -> Element:
    """Circled dot shown for names that do not resolve."""
    svg = Element("svg", {"xmlns": "http://www.w3.org/2000/svg", "viewBox": "0 0 24 24", "data-placeholder": "true"})
    svg.add(Element("circle", {"cx": "12", "cy": "12", "r": "9", "fill": "none", "stroke": "currentColor", "stroke-width": "2"}))
    svg.add(Element("circle", {"cx": "12", "cy": "12", "r": "3", "fill": "currentColor"}))
    return svg


def icon_svg(name: str, size: float, color: str, warnings: list[str], icon_dir=None) -> Element:
    svg = resolve_icon(name, icon_dir)
    if svg is None:
        warnings.append(f"icon {name!r} not found; using placeholder")
        svg = placeholder_icon()
    svg.attrs["xmlns"] = "http://www.w3.org/2000/svg"
    svg.attrs["width"] = fmt(size)
    svg.attrs["height"] = fmt(size)
    svg.attrs["data-icon"] = name
    svg.style = {"display": "block", "color": color}
    return svg


def _text(props: dict, content: str, box: Box, wrap: bool) -> Element:
    fs = props.get("fontSize", DEFAULT_FONT_SIZE)
    style = {
        "display": "block",
        "font-size": px(fs),
        "line-height": fmt(LINE_HEIGHT),
        "font-weight": fmt(props.get("fontWeight", 400)),
        "color": props.get("color", DEFAULT_TEXT),
        "text-align": props.get("align", "left"),
        "white-space": "normal" if wrap else "nowrap",
    }
    return Element("span", style=style, children=[content] if content else [])


def _app_logo(props: dict, warnings: list[str], icon_dir) -> Element:
    size = props.get("size", 40)
    tile = Element(
        "div",
        style={
            "display": "flex",
            "align-items": "center",
            "justify-content": "center",
            "width": px(size),
            "height": px(size),
            "border-radius": px(LOGO_RADIUS * size),
            "background-color": props.get("backgroundColor", DEFAULT_ACCENT),
            "overflow": "hidden",
        },
    )
    tile.attrs["data-radius"] = fmt(LOGO_RADIUS * size)
    if "icon" in props:
        tile.add(icon_svg(props["icon"], 0.6 * size, "#ffffff", warnings, icon_dir))
    else:
        letter = props.get("name", "")[:1].upper()
        tile.add(Element("span", style={"font-size": px(0.5 * size), "font-weight": "600", "color": "#ffffff"}, children=[letter]))
    return tile


def _button(props: dict, warnings: list[str], icon_dir) -> Element:
    fs = props.get("fontSize", DEFAULT_FONT_SIZE)
    circle = props.get("shape") == "circle"
    style = {
        "display": "flex",
        "align-items": "center",
        "justify-content": "center",
        "box-sizing": "border-box",
        "background-color": props.get("backgroundColor", DEFAULT_ACCENT),
        "color": props.get("color", "#ffffff"),
        "font-size": px(fs),
        "font-weight": fmt(props.get("fontWeight", 500)),
        "padding": px(props.get("padding", 8)),
    }
    if "size" in props:
        style["width"] = px(props["size"])
        style["height"] = px(props["size"])
    if circle:
        radius = props.get("size", LINE_HEIGHT * fs + 2 * props.get("padding", 8)) / 2
    else:
        radius = props.get("borderRadius", 8)
    style["border-radius"] = px(radius)
    btn = Element("div", {"role": "button", "data-radius": fmt(radius)}, style)
    if "icon" in props:
        btn.add(icon_svg(props["icon"], LINE_HEIGHT * fs, style["color"], warnings, icon_dir))
    elif props.get("content"):
        btn.add(Element("span", children=[props["content"]]))
    return btn


def _checkbox(props: dict) -> Element:
    size = props.get("size", 20)
    color = props.get("color", DEFAULT_ACCENT)
    checked = props.get("checked", False)
    box = Element(
        "div",
        {"role": "checkbox", "aria-checked": "true" if checked else "false"},
        {
            "box-sizing": "border-box",
            "width": px(size),
            "height": px(size),
            "border-radius": px(0.25 * size),
            "border": f"2px solid {color if checked else '#c7c7cc'}",
            "background-color": color if checked else "transparent",
        },
    )
    if checked:
        svg = Element("svg", {"xmlns": "http://www.w3.org/2000/svg", "viewBox": "0 0 24 24", "width": "100%", "height": "100%"})
        svg.add(Element("path", {"d": "M5 12.5l4.5 4.5L19 7.5", "fill": "none", "stroke": "#ffffff",
                                 "stroke-width": "3", "stroke-linecap": "round", "stroke-linejoin": "round"}))
        box.add(svg)
    return box


def _switch(props: dict) -> Element:
    on = props.get("on", False)
    track = Element(
        "div",
        {"role": "switch", "aria-checked": "true" if on else "false"},
        {
            "position": "relative",
            "width": "51px",
            "height": "31px",
            "border-radius": "15.5px",
            "background-color": props.get("color", "#34c759") if on else props.get("trackColor", DEFAULT_TRACK),
        },
    )
    track.add(
        Element(
            "div",
            style={
                "position": "absolute",
                "top": "2px",
                "left": "22px" if on else "2px",
                "width": "27px",
                "height": "27px",
                "border-radius": "13.5px",
                "background-color": "#ffffff",
            },
        )
    )
    return track


def _slider(props: dict) -> Element:
    value = props.get("value", 0.5)
    pct = f"{fmt(100 * value)}%"
    wrap = Element("div", {"role": "slider", "aria-valuenow": fmt(value)}, {"position": "relative", "width": "100%", "height": "20px"})
    bar = {"position": "absolute", "top": "8px", "left": "0", "height": "4px", "border-radius": "2px"}
    wrap.add(Element("div", style={**bar, "width": "100%", "background-color": props.get("trackColor", DEFAULT_TRACK)}))
    wrap.add(Element("div", style={**bar, "width": pct, "background-color": props.get("color", DEFAULT_ACCENT)}))
    wrap.add(
        Element(
            "div",
            style={
                "position": "absolute",
                "top": "0",
                "left": f"calc({pct} - 10px)",
                "width": "20px",
                "height": "20px",
                "border-radius": "10px",
                "background-color": "#ffffff",
                "box-shadow": "0 1px 3px rgba(0, 0, 0, 0.3)",
            },
        )
    )
    return wrap


def _divider(props: dict) -> Element:
    t = px(props.get("thickness", 1))
    vertical = props.get("orientation") == "vertical"
    style = {"background-color": props.get("color", "#d1d1d6")}
    style.update({"width": t, "height": "100%"} if vertical else {"width": "100%", "height": t})
    return Element("div", {"role": "separator"}, style)


def _indicator(props: dict) -> Element:
    t = props.get("thickness", 4)
    return Element(
        "div",
        style={"width": px(t), "height": "100%", "border-radius": px(t / 2), "background-color": props.get("color", DEFAULT_ACCENT)},
    )


def _image(props: dict, kind: ComponentKind) -> Element:
    style = {
        "display": "block",
        "width": "100%",
        "height": "100%",
        "object-fit": props.get("fit", "cover"),
        "border-radius": px(props.get("borderRadius", 0)),
        "background-color": "#d1d1d6" if kind == ComponentKind.Image else "#dfe8d8",
    }
    return Element("img", {"src": props.get("src", ""), "alt": ""}, style)


def emit_primitive(
    kind: ComponentKind | str,
    props: dict,
    box: Box,
    content: str | None = None,
    warnings: list[str] | None = None,
    icon_dir=None,
    wrap: bool = False,
) -> Element:
    """Inner markup for a non-chart leaf; never fails on missing icons."""
    kind = ComponentKind(kind)
    warnings = warnings if warnings is not None else []
    if kind == ComponentKind.Text:
        return _text(props, content or "", box, wrap)
    if kind == ComponentKind.Icon:
        return icon_svg(props.get("name", ""), props.get("size", 24), props.get("color", DEFAULT_TEXT), warnings, icon_dir)
    if kind == ComponentKind.AppLogo:
        return _app_logo(props, warnings, icon_dir)
    if kind == ComponentKind.Button:
        return _button(props, warnings, icon_dir)
    if kind == ComponentKind.Checkbox:
        return _checkbox(props)
    if kind == ComponentKind.Switch:
        return _switch(props)
    if kind == ComponentKind.Slider:
        return _slider(props)
    if kind == ComponentKind.Divider:
        return _divider(props)
    if kind == ComponentKind.Indicator:
        return _indicator(props)
    if kind in (ComponentKind.Image, ComponentKind.MapImage):
        return _image(props, kind)
    raise UnsupportedKind(f"no primitive emitter for {kind}")
