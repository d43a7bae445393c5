from .charts import AxisRange, axis_autorange, emit_chart_svg, plot_area
from .elements import Element, to_html, to_jsx
from .emit import CompileResult, EmitTarget, build_tree, compile_spec, default_size, emit, render_document
from .primitives import emit_primitive, placeholder_icon, resolve_icon

__all__ = [
    "AxisRange",
    "CompileResult",
    "Element",
    "EmitTarget",
    "axis_autorange",
    "build_tree",
    "compile_spec",
    "default_size",
    "emit",
    "emit_chart_svg",
    "emit_primitive",
    "placeholder_icon",
    "plot_area",
    "render_document",
    "resolve_icon",
    "to_html",
    "to_jsx",
]
