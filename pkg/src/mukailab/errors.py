"""Exception hierarchy shared by every module."""


class MukaiError(Exception):
    """Base class for all errors raised by mukailab."""


class DomainError(MukaiError, ValueError):
    """Input is well-formed but lies outside the mathematical domain."""


class UnsupportedError(MukaiError):
    """The request is valid but this library has no certified algorithm for it."""


class ConfigError(MukaiError, ValueError):
    """A configuration document violates the schema.

    ``path`` is a dotted location such as ``"surface.ns.gram"``.
    """

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")
