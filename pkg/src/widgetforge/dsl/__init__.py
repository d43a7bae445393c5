from .model import (
    ContainerNode,
    Dimension,
    LeafNode,
    Node,
    WidgetShell,
    WidgetSpec,
    child_path,
    count_nodes,
    structural_id,
    walk,
)
from .parse import parse_node, parse_widget_dsl, spec_from_obj
from .schema import CHART_KINDS, PROP_SCHEMAS, ComponentKind
from .serialize import node_to_obj, serialize, spec_to_obj
from .templates import instantiate_template, template_library
from .validate import Finding, RepairEntry, ValidationReport, repair, validate

__all__ = [
    "CHART_KINDS",
    "PROP_SCHEMAS",
    "ComponentKind",
    "ContainerNode",
    "Dimension",
    "Finding",
    "LeafNode",
    "Node",
    "RepairEntry",
    "ValidationReport",
    "WidgetShell",
    "WidgetSpec",
    "child_path",
    "count_nodes",
    "instantiate_template",
    "node_to_obj",
    "parse_node",
    "parse_widget_dsl",
    "repair",
    "serialize",
    "spec_from_obj",
    "spec_to_obj",
    "structural_id",
    "template_library",
    "validate",
    "walk",
]
