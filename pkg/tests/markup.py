"""Independent readers for emitted HTML and JSX, used as test oracles."""

import json
import re
from html.parser import HTMLParser


def kebab_to_camel(name: str) -> str:
    head, *rest = name.split("-")
    return head + "".join(p[:1].upper() + p[1:] for p in rest)


def parse_css(text: str) -> dict[str, str]:
    out = {}
    for decl in filter(None, (d.strip() for d in text.split(";"))):
        key, _, value = decl.partition(":")
        out[key.strip()] = value.strip()
    return out


class _Collector(HTMLParser):
    VOID = {"img", "br", "hr", "meta", "input"}

    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.depth = 0
        self.nodes = []  # (id, kind, style, depth)

    def handle_starttag(self, tag, attrs):
        a = dict(attrs)
        if "data-wf-id" in a:
            self.nodes.append((a["data-wf-id"], a["data-wf-kind"], parse_css(a.get("style", "")), self.depth))
        if tag not in self.VOID:
            self.depth += 1

    def handle_startendtag(self, tag, attrs):
        a = dict(attrs)
        if "data-wf-id" in a:
            self.nodes.append((a["data-wf-id"], a["data-wf-kind"], parse_css(a.get("style", "")), self.depth))

    def handle_endtag(self, tag):
        if tag not in self.VOID:
            self.depth -= 1


def html_nodes(source: str):
    p = _Collector()
    p.feed(source)
    p.close()
    return p.nodes


_JSX_NODE = re.compile(r'data-wf-id="([^"]+)" data-wf-kind="([^"]+)" style=\{(\{.*?\})\}(?: />|>)$', re.M)


def jsx_nodes(source: str):
    return [(i, k, json.loads(s)) for i, k, s in _JSX_NODE.findall(source)]


def html_triples(source: str):
    return sorted((i, k, json.dumps({kebab_to_camel(a): v for a, v in s.items()}, sort_keys=True)) for i, k, s, _ in html_nodes(source))


def jsx_triples(source: str):
    return sorted((i, k, json.dumps(s, sort_keys=True)) for i, k, s in jsx_nodes(source))
