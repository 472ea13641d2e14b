"""Published reference values used by checks and tables."""

from app.reference.small_sizes import SMALL_SIZES, ReferenceRow, reference_row

__all__ = ["SMALL_SIZES", "ReferenceRow", "reference_row"]
