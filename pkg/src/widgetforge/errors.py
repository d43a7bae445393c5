"""Exception hierarchy shared across the toolchain."""


class WidgetForgeError(Exception):
    """Base class for all toolchain errors."""


class DSLSyntaxError(WidgetForgeError):
    """Malformed JSON input."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class SchemaError(WidgetForgeError):
    """A value has the wrong shape or type at ``path``."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


class UnknownComponent(SchemaError):
    pass


class Unrepairable(WidgetForgeError):
    pass


class UnknownTemplate(WidgetForgeError):
    pass


class BadParameter(WidgetForgeError):
    pass


class DegenerateViewport(WidgetForgeError):
    pass


class NoConvergence(WidgetForgeError):
    pass


class UnsupportedKind(WidgetForgeError):
    pass


class EmptyData(WidgetForgeError):
    pass


class EmptySupport(WidgetForgeError):
    pass


class UndecodableImage(WidgetForgeError):
    pass


class AllTransparent(WidgetForgeError):
    pass


class DimensionMismatch(WidgetForgeError):
    pass


class DuplicateId(WidgetForgeError):
    pass


class EmptyIndex(WidgetForgeError):
    pass
