"""Common schemas."""

from pydantic import BaseModel


class ErrorResponse(BaseModel):
    """Error printed by --format json."""

    error: str
    detail: str | None = None
    exit_code: int = 1
