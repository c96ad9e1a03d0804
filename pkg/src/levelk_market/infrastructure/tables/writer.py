"""Single writer for experiment tables (CSV or JSON records)."""

import logging
import sys
from pathlib import Path
from typing import Optional, TextIO, Union

import pandas as pd

from levelk_market.exceptions import OutputError
from levelk_market.models import OutputFormat

logger = logging.getLogger(__name__)


def render_table(
    frame: pd.DataFrame, fmt: OutputFormat = OutputFormat.CSV, significant_digits: int = 12
) -> str:
    """Serialize a table to text.

    CSV uses '.' decimals and ``%.<n>g`` floats; JSON is an array of flat
    records, one per row.
    """
    if OutputFormat(fmt) is OutputFormat.JSON:
        return frame.to_json(orient="records", double_precision=15) + "\n"
    return frame.to_csv(index=False, float_format=f"%.{significant_digits}g", lineterminator="\n")


def write_table(
    frame: pd.DataFrame,
    output: Optional[Union[str, Path]] = None,
    fmt: OutputFormat = OutputFormat.CSV,
    significant_digits: int = 12,
    stream: Optional[TextIO] = None,
) -> None:
    """Write a table to a file, or to stdout when no output path is given.

    Raises:
        OutputError: If the file cannot be written
    """
    text = render_table(frame, fmt, significant_digits)
    if output is None:
        (stream or sys.stdout).write(text)
        return

    path = Path(output)
    try:
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        logger.error(f"Failed to write {len(frame)} rows to {path}: {e}")
        raise OutputError(path, e.strerror or str(e)) from e
    logger.info(f"Wrote {len(frame)} rows to {path}")
