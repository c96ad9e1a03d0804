"""Table output."""

from levelk_market.infrastructure.tables.writer import render_table, write_table

__all__ = ["render_table", "write_table"]
