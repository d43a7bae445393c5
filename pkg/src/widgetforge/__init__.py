"""Widget DSL toolchain: parse, lay out, fit, compile and evaluate widgets."""

__version__ = "0.1.0"
