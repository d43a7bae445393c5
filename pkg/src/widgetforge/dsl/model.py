"""Typed WidgetDSL tree.

Nodes are frozen dataclasses; transformations build new trees with
``dataclasses.replace``. ``props`` dicts are shared by reference and must be
treated as read-only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Union

from .schema import ComponentKind

# px number, percent string such as "50%", or unset
Dimension = Union[float, str, None]


@dataclass(frozen=True)
class LeafNode:
    component: ComponentKind
    props: dict = field(default_factory=dict)
    flex: float | None = None
    width: Dimension = None
    height: Dimension = None
    content: str | None = None


@dataclass(frozen=True)
class ContainerNode:
    direction: str | None = "col"
    children: tuple["Node", ...] = ()
    gap: float = 0
    flex: float | None = None
    width: Dimension = None
    height: Dimension = None
    padding: float = 0
    background_color: str | None = None
    border_radius: float | None = None


Node = Union[ContainerNode, LeafNode]


@dataclass(frozen=True)
class WidgetSpec:
    """The widget shell plus its root container (the compiler's AST)."""

    background_color: str = "#ffffff"
    border_radius: float = 0
    padding: float = 0
    aspect_ratio: float | None = 1.0
    root: ContainerNode | None = field(default_factory=ContainerNode)


WidgetShell = WidgetSpec


def child_path(parent: str, index: int) -> str:
    return f"{parent}.children[{index}]"


def walk(node: Node, path: str = "root") -> Iterator[tuple[str, Node]]:
    """Pre-order traversal yielding ``(path, node)``."""
    yield path, node
    if isinstance(node, ContainerNode):
        for i, child in enumerate(node.children):
            yield from walk(child, child_path(path, i))


def structural_id(path: str) -> str:
    """Stable node identifier derived from a node path.

    ``root`` -> ``n``, ``root.children[2].children[0]`` -> ``n-2-0``.
    """
    if path == "shell":
        return "shell"
    if not path.startswith("root"):
        raise ValueError(f"not a node path: {path!r}")
    parts = path[len("root"):].replace(".children[", " ").replace("]", "").split()
    return "-".join(["n", *parts])


def count_nodes(spec: WidgetSpec) -> int:
    if spec.root is None:
        return 0
    return sum(1 for _ in walk(spec.root))
