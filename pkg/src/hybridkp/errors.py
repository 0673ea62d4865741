class HybridKPError(Exception):
    """Base class for errors raised by this package."""


class ConfigError(HybridKPError):
    """Invalid configuration or missing model/knowledge base."""


class FormatError(HybridKPError, ValueError):
    """A model, knowledge-base or list file could not be parsed."""

    def __init__(self, source: str, lineno: int, message: str):
        self.source = source
        self.lineno = lineno
        super().__init__(f"{source}:{lineno}: {message}")
