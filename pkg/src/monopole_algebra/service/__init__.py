"""HTTP service wrapping the library; the CLI calls the same handlers in-process."""

from .app import create_app
from .handlers import OutputRecord

__all__ = ["create_app", "OutputRecord"]
