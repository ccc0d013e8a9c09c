"""
Teleportation GME: Shared Base Schemas

Common Pydantic building blocks reused across all I/O schemas.
"""

from pydantic import BaseModel, ConfigDict


class BaseSchema(BaseModel):
    """Base for all schemas. Immutable once built, unknown keys rejected."""

    model_config = ConfigDict(frozen=True, extra="forbid")
