"""Target-neutral element tree and its HTML / JSX serializers.

Both targets render the same tree, so node hierarchy, attributes and styles
are identical by construction; only the surface syntax differs.
"""

from __future__ import annotations

import html
import json
import re
from dataclasses import dataclass, field
from typing import Union

VOID_TAGS = frozenset({"img", "br", "hr", "meta", "input"})

# HTML/SVG attribute -> JSX prop
_JSX_ATTRS = {"class": "className", "for": "htmlFor", "xlink:href": "xlinkHref"}


@dataclass
class Element:
    tag: str
    attrs: dict[str, str] = field(default_factory=dict)
    style: dict[str, str] = field(default_factory=dict)
    children: list[Union["Element", str]] = field(default_factory=list)

    def add(self, *children: Union["Element", str]) -> "Element":
        self.children.extend(children)
        return self

    def iter(self):
        yield self
        for child in self.children:
            if isinstance(child, Element):
                yield from child.iter()


def fmt(value: float) -> str:
    """Deterministic short decimal: at most 2 places, no trailing zeros, no -0."""
    text = f"{value:.2f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def px(value: float) -> str:
    return f"{fmt(value)}px"


def css_text(style: dict[str, str]) -> str:
    return "; ".join(f"{k}: {v}" for k, v in style.items())


def camel(name: str) -> str:
    return re.sub(r"-([a-z])", lambda m: m.group(1).upper(), name)


def jsx_attr(name: str) -> str:
    if name in _JSX_ATTRS:
        return _JSX_ATTRS[name]
    if name.startswith(("data-", "aria-")):
        return name
    return camel(name)


def to_html(el: Element, depth: int = 0, indent: str = "  ") -> str:
    pad = indent * depth
    attrs = "".join(f' {k}="{html.escape(v, quote=True)}"' for k, v in el.attrs.items())
    if el.style:
        attrs += f' style="{html.escape(css_text(el.style), quote=True)}"'
    if el.tag in VOID_TAGS:
        return f"{pad}<{el.tag}{attrs}>"
    if not el.children:
        return f"{pad}<{el.tag}{attrs}></{el.tag}>"
    if all(isinstance(c, str) for c in el.children):
        text = "".join(html.escape(c, quote=False) for c in el.children)
        return f"{pad}<{el.tag}{attrs}>{text}</{el.tag}>"
    inner = "\n".join(
        to_html(c, depth + 1, indent) if isinstance(c, Element) else pad + indent + html.escape(c, quote=False)
        for c in el.children
    )
    return f"{pad}<{el.tag}{attrs}>\n{inner}\n{pad}</{el.tag}>"


def _jsx_style(style: dict[str, str]) -> str:
    body = ", ".join(f"{json.dumps(camel(k))}: {json.dumps(v)}" for k, v in style.items())
    return "{{" + body + "}}"


def to_jsx(el: Element, depth: int = 0, indent: str = "  ") -> str:
    pad = indent * depth
    attrs = "".join(f" {jsx_attr(k)}={json.dumps(v)}" for k, v in el.attrs.items())
    if el.style:
        attrs += f" style={_jsx_style(el.style)}"
    if not el.children:
        return f"{pad}<{el.tag}{attrs} />"
    if all(isinstance(c, str) for c in el.children):
        text = "".join("{" + json.dumps(c, ensure_ascii=False) + "}" for c in el.children)
        return f"{pad}<{el.tag}{attrs}>{text}</{el.tag}>"
    inner = "\n".join(
        to_jsx(c, depth + 1, indent)
        if isinstance(c, Element)
        else pad + indent + "{" + json.dumps(c, ensure_ascii=False) + "}"
        for c in el.children
    )
    return f"{pad}<{el.tag}{attrs}>\n{inner}\n{pad}</{el.tag}>"
