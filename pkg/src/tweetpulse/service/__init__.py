"""HTTP JSON API over published analytics snapshots."""
from .app import ApiError, create_app
from .schemas import SCHEMAS

__all__ = ["SCHEMAS", "ApiError", "create_app"]
