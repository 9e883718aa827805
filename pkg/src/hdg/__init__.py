"""Heegaard diagrams, their dual square complexes, pinched surfaces and reducing curves."""

from .diagram import HeegaardDiagram, validate
from .io import parse, serialize

__all__ = ["HeegaardDiagram", "parse", "serialize", "validate"]
__version__ = "0.1.0"
