"""Theme mutation and aligned (DSL, HTML, React, layout) bundle generation."""

from __future__ import annotations

import hashlib
import json
import os
import random
import tempfile
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Iterable

from ..codegen import EmitTarget, build_tree, render_document
from ..dsl.model import ContainerNode, LeafNode, Node, WidgetSpec, walk
from ..dsl.parse import parse_widget_dsl
from ..dsl.schema import PROP_SCHEMAS, ComponentKind
from ..dsl.serialize import serialize
from ..dsl.validate import validate
from ..fit import fit_width
from ..layout import layout_report, layout_to_json, solve_layout

THEME_DIR = Path(__file__).parent / "themes"
SEED_DIR = Path(__file__).parent / "seeds"

_ACCENT_KINDS = {
    ComponentKind.ProgressBar,
    ComponentKind.ProgressRing,
    ComponentKind.Slider,
    ComponentKind.Switch,
    ComponentKind.Checkbox,
    ComponentKind.Indicator,
}
_CHART_COLOR_KINDS = {
    ComponentKind.BarChart,
    ComponentKind.StackedBarChart,
    ComponentKind.LineChart,
    ComponentKind.PieChart,
    ComponentKind.RadarChart,
    ComponentKind.Sparkline,
}


class Theme(str, Enum):
    light = "light"
    dark = "dark"
    colorful = "colorful"
    glassmorphism = "glassmorphism"
    minimal = "minimal"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class MutationPalette:
    name: str
    backgrounds: tuple[str, ...]
    surfaces: tuple[str, ...]
    text_colors: tuple[str, ...]
    accents: tuple[str, ...]
    chart_colors: tuple[tuple[str, ...], ...]
    track_colors: tuple[str, ...]
    divider_colors: tuple[str, ...]
    radius_delta: tuple[int, int]
    font_weights: tuple[int, ...]

    @classmethod
    def from_obj(cls, obj: dict) -> "MutationPalette":
        return cls(
            name=obj["name"],
            backgrounds=tuple(obj["backgrounds"]),
            surfaces=tuple(obj["surfaces"]),
            text_colors=tuple(obj["text_colors"]),
            accents=tuple(obj["accents"]),
            chart_colors=tuple(tuple(c) for c in obj["chart_colors"]),
            track_colors=tuple(obj["track_colors"]),
            divider_colors=tuple(obj["divider_colors"]),
            radius_delta=(int(obj["radius_delta"][0]), int(obj["radius_delta"][1])),
            font_weights=tuple(obj["font_weights"]),
        )


@lru_cache(maxsize=None)
def load_palette(theme: Theme | str) -> MutationPalette:
    theme = Theme(theme)
    return MutationPalette.from_obj(json.loads((THEME_DIR / f"{theme}.json").read_text("utf-8")))


def pair_seed(seed: int, spec_id: str, theme: Theme | str) -> int:
    """Per-(spec, theme) seed, independent of processing order."""
    digest = hashlib.sha256(f"{seed}:{spec_id}:{Theme(theme)}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _radius(value: float, pal: MutationPalette, rng: random.Random) -> float:
    return max(0, value + rng.randint(*pal.radius_delta))


def _mutate_props(leaf: LeafNode, pal: MutationPalette, rng: random.Random) -> dict:
    kind = leaf.component
    schema = PROP_SCHEMAS[kind]
    props = dict(leaf.props)
    if kind == ComponentKind.Text:
        props["color"] = rng.choice(pal.text_colors)
        if "fontWeight" in props:
            props["fontWeight"] = rng.choice(pal.font_weights)
    elif kind == ComponentKind.Icon:
        props["color"] = rng.choice(pal.text_colors + pal.accents)
    elif kind in (ComponentKind.Button, ComponentKind.AppLogo):
        props["backgroundColor"] = rng.choice(pal.accents)
        if kind == ComponentKind.Button:
            if "fontWeight" in props:
                props["fontWeight"] = rng.choice(pal.font_weights)
            if "borderRadius" in props:
                props["borderRadius"] = _radius(props["borderRadius"], pal, rng)
    elif kind == ComponentKind.Divider:
        props["color"] = rng.choice(pal.divider_colors)
    elif kind in (ComponentKind.Image, ComponentKind.MapImage):
        if "borderRadius" in props:
            props["borderRadius"] = _radius(props["borderRadius"], pal, rng)
    if kind in _ACCENT_KINDS:
        props["color"] = rng.choice(pal.accents)
        if "trackColor" in schema:
            props["trackColor"] = rng.choice(pal.track_colors)
    if kind in _CHART_COLOR_KINDS:
        chart = rng.choice(pal.chart_colors)
        if "colors" in props or "color" not in schema:
            n = max(len(props.get("colors", ())), len(chart))
            props["colors"] = [chart[i % len(chart)] for i in range(n)]
        if "color" in schema:
            props["color"] = chart[0]
        if "gridColor" in schema and "gridColor" in props:
            props["gridColor"] = rng.choice(pal.track_colors)
    return props


def _mutate_node(node: Node, pal: MutationPalette, rng: random.Random) -> Node:
    if isinstance(node, LeafNode):
        return replace(node, props=_mutate_props(node, pal, rng))
    changes = {"children": tuple(_mutate_node(c, pal, rng) for c in node.children)}
    if node.background_color is not None:
        changes["background_color"] = rng.choice(pal.surfaces)
    if node.border_radius is not None:
        changes["border_radius"] = _radius(node.border_radius, pal, rng)
    return replace(node, **changes)


def mutate(spec: WidgetSpec, theme: Theme | str, seed: int) -> WidgetSpec:
    """Rewrite only palette fields (colours, radii, font weights, chart colours)."""
    pal = load_palette(theme)
    rng = random.Random(seed)
    root = _mutate_node(spec.root, pal, rng) if spec.root is not None else None
    return replace(
        spec,
        background_color=rng.choice(pal.backgrounds),
        border_radius=_radius(spec.border_radius, pal, rng),
        root=root,
    )


def _structure(node: Node, path: str) -> list:
    out = []
    for p, n in walk(node, path):
        if isinstance(n, ContainerNode):
            out.append([p, "container", n.direction, len(n.children), n.gap, n.padding, n.flex, n.width, n.height])
        else:
            data = {k: n.props[k] for k in ("data", "labels", "value", "checked", "on", "name", "icon") if k in n.props}
            out.append([p, str(n.component), n.content, data, n.flex, n.width, n.height])
    return out


def structure_hash(spec: WidgetSpec) -> str:
    """Hash of tree shape, kinds, sizing, text and data; blind to styling."""
    body = [spec.padding, spec.aspect_ratio]
    if spec.root is not None:
        body.append(_structure(spec.root, "root"))
    return hashlib.sha256(json.dumps(body, sort_keys=True).encode()).hexdigest()


@dataclass
class SynthBundle:
    spec_id: str
    theme: str
    seed: int
    dsl: str
    code_html: str
    code_react: str
    layout: dict
    structure_hash: str
    validation: list = field(default_factory=list)

    @property
    def key(self) -> str:
        return f"{self.spec_id}/{self.theme}"


def make_bundle(spec_id: str, spec: WidgetSpec, theme: Theme | str, seed: int) -> SynthBundle:
    item_seed = pair_seed(seed, spec_id, theme)
    mutated = mutate(spec, theme, item_seed)
    report = validate(mutated)
    fit = fit_width(mutated)
    size = (fit.w_star, fit.h_star)
    tree = solve_layout(mutated, size)
    layout = layout_to_json(tree, layout_report(tree))
    layout["fit"] = {"w_star": fit.w_star, "h_star": fit.h_star, "iterations": fit.iterations}
    shell = build_tree(mutated, size)
    return SynthBundle(
        spec_id=spec_id,
        theme=str(Theme(theme)),
        seed=item_seed,
        dsl=serialize(mutated),
        code_html=render_document(shell, EmitTarget.Html),
        code_react=render_document(shell, EmitTarget.React),
        layout=layout,
        structure_hash=structure_hash(mutated),
        validation=report.to_json(),
    )


def load_seeds(directory: Path | str | None = None) -> dict[str, WidgetSpec]:
    base = Path(directory) if directory else SEED_DIR
    specs = {}
    for path in sorted(base.glob("*.json")):
        spec_id = path.name.split(".")[0]
        specs[spec_id] = parse_widget_dsl(path.read_text("utf-8"))
    return specs


def batch_generate(
    specs: dict[str, WidgetSpec],
    themes: Iterable[Theme | str] = tuple(Theme),
    seed: int = 7,
) -> tuple[list[SynthBundle], list[dict]]:
    """Cartesian product of specs × themes; failures are recorded, not raised."""
    bundles, failures = [], []
    for spec_id in sorted(specs):
        for theme in themes:
            try:
                bundles.append(make_bundle(spec_id, specs[spec_id], theme, seed))
            except Exception as exc:
                failures.append({"spec": spec_id, "theme": str(theme), "error": f"{type(exc).__name__}: {exc}"})
    return bundles, failures


def atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_corpus(out_dir: Path | str, bundles: list[SynthBundle], failures: list[dict] | None = None) -> dict:
    out = Path(out_dir)
    entries = []
    for b in bundles:
        d = out / b.spec_id / b.theme
        atomic_write(d / "widget.json", b.dsl)
        atomic_write(d / "widget.html", b.code_html)
        atomic_write(d / "widget.jsx", b.code_react)
        atomic_write(d / "layout.json", json.dumps(b.layout, indent=2) + "\n")
        entries.append(
            {
                "id": b.spec_id,
                "theme": b.theme,
                "seed": b.seed,
                "structure_hash": b.structure_hash,
                "validation_errors": sum(1 for f in b.validation if f.get("severity") == "error"),
            }
        )
    manifest = {
        "bundles": entries,
        "failures": failures or [],
        "validation_failures": sum(1 for e in entries if e["validation_errors"]),
    }
    atomic_write(out / "manifest.json", json.dumps(manifest, indent=2) + "\n")
    return manifest
