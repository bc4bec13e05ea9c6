"""
Shared utilities: run settings.
"""

from .config import CAP_FIELDS, Settings, load_settings

__all__ = ["CAP_FIELDS", "Settings", "load_settings"]
