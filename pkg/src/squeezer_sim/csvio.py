"""CSV emission with embedded parameter snapshots.

Every CSV starts with `# key = value` comment lines carrying the full
run configuration.  Stripping the leading `# ` turns the header back
into a valid config file, so a file documents exactly how to reproduce
itself; rerunning with identical seeds must reproduce it byte for byte.
Floats are written in scientific notation with 13 significant digits.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

__all__ = ["format_value", "snapshot_comments", "write_csv"]


def format_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(v)
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.12e}"
    return str(v)


def snapshot_comments(snapshot: dict) -> list[str]:
    """Render a config snapshot as `key = value` lines (ordered as given)."""
    return [f"{k} = {format_value(v)}" for k, v in snapshot.items()]


def write_csv(path, columns: list[str], rows, comments: list[str] | None = None):
    """Write rows (any mix of str/int/float cells) with comment header."""
    lines = []
    for c in comments or []:
        lines.append(f"# {c}")
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(format_value(v) for v in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
