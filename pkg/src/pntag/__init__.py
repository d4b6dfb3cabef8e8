"""Context-driven proper-name tagging for German newspaper text."""

__version__ = "0.1.0"
