"""
Source registry: maps graph descriptions to the source that parses them.
"""

from typing import Any

from pdl.errors import PreconditionError
from pdl.sources.base import BaseGraphSource, ParsedGraph


class SourceRegistry:
    """
    Registry for graph sources.

    Sources are tried in registration order; the first whose pattern matches
    parses the description.
    """

    _sources: dict[str, type[BaseGraphSource]] = {}

    @classmethod
    def register(cls, source_class: type[BaseGraphSource]) -> type[BaseGraphSource]:
        """
        Register a source class.

        Can be used as a decorator:
            @SourceRegistry.register
            class MySource(BaseGraphSource):
                ...
        """
        cls._sources[source_class.family_name.lower()] = source_class
        return source_class

    @classmethod
    def get_source(cls, text: str | None = None, family_name: str | None = None) -> BaseGraphSource:
        """
        Get a source instance by family name or by the description it must parse.

        Raises:
            PreconditionError: If no registered source matches.
        """
        if family_name:
            name = family_name.lower()
            if name not in cls._sources:
                raise PreconditionError(
                    f"Unknown family: {family_name}. Supported: {', '.join(cls._sources)}"
                )
            return cls._sources[name]()
        if text is not None:
            for source_class in cls._sources.values():
                if source_class.can_handle(text):
                    return source_class()
            raise PreconditionError(
                f"Unknown graph expression: '{text}'. "
                f"Supported: {', '.join(s.syntax for s in cls._sources.values())}"
            )
        raise PreconditionError("Either text or family_name must be provided")

    @classmethod
    def get_supported_sources(cls) -> list[dict[str, Any]]:
        return [source.get_info() for _, source in sorted(cls._sources.items())]


def get_source(text: str | None = None, family_name: str | None = None) -> BaseGraphSource:
    """Get a source instance. See SourceRegistry.get_source."""
    return SourceRegistry.get_source(text, family_name)


def get_supported_sources() -> list[dict[str, Any]]:
    """Get supported sources. See SourceRegistry.get_supported_sources."""
    return SourceRegistry.get_supported_sources()


def register_source(source_class: type[BaseGraphSource]) -> type[BaseGraphSource]:
    """
    Class decorator adding a custom source to the registry.

    Returns the class unchanged. See SourceRegistry.register.
    """
    return SourceRegistry.register(source_class)


def parse_graph_source(text: str) -> ParsedGraph:
    """Parse a generator expression (K6, C9, K_1_2_2, P5), JSON text or JSON file path."""
    return get_source(text).parse(text)


def _register_builtin_sources() -> None:
    """Register all built-in sources."""
    # Import sources to trigger registration
    from pdl.sources import (  # noqa: F401
        complete,
        cycle,
        jsonfile,
        multipartite,
        path,
    )


_register_builtin_sources()
