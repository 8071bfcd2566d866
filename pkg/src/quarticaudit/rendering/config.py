"""Output configuration for records written to stdout."""

from enum import Enum

from pydantic import BaseModel, Field


class OutputFormat(str, Enum):
    """Supported record formats."""

    TEXT = "text"  # One line per check, for people
    JSONL = "jsonl"  # One JSON object per line, integers as decimal strings
    CSV = "csv"  # Header row, one row per record


class RenderConfig(BaseModel):
    """How records are rendered."""

    format: OutputFormat = Field(default=OutputFormat.TEXT, description="Record format")
    witnesses: bool = Field(default=True, description="Include witness values in text output")

    class Config:
        """Pydantic configuration."""

        extra = "forbid"
