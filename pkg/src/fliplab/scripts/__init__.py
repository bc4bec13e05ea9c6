"""
Command-line scripts: the fliplab CLI, graph exports and verification suites.
"""

from . import cli, export, verify

__all__ = ["cli", "export", "verify"]
