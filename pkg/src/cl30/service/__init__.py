"""HTTP layer: pydantic schemas, handlers, and the FastAPI application."""

from . import handlers, models

__all__ = ["handlers", "models"]
