"""Regenerated tables."""

from pydantic import BaseModel, Field


class Table(BaseModel):
    """A table as strings, with a match column where reference values exist."""

    name: str
    columns: list[str]
    rows: list[list[str]] = Field(default_factory=list)

    @property
    def all_match(self) -> bool:
        if "match" not in self.columns:
            return True
        index = self.columns.index("match")
        return all(row[index] != "no" for row in self.rows)

    def as_text(self) -> str:
        """Columns padded to their widest cell."""
        widths = [max([len(c)] + [len(row[i]) for row in self.rows]) for i, c in enumerate(self.columns)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(self.columns, widths)).rstrip()]
        for row in self.rows:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        return "\n".join(lines)
