"""Newline-delimited JSON records and plain aligned tables for CLI output."""
from __future__ import annotations

import json
from typing import Iterable


def format_records(records: Iterable[dict]) -> str:
    return "".join(json.dumps(r) + "\n" for r in records)


def read_records(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def _cell(value) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    if value is None:
        return "-"
    return str(value)


def format_table(records: list[dict]) -> str:
    """Plain aligned table; columns are the union of keys in first-seen order."""
    if not records:
        return ""
    columns: list[str] = []
    for r in records:
        columns.extend(c for c in r if c not in columns)
    rows = [[_cell(r.get(c)) for c in columns] for r in records]
    widths = [max(len(c), *(len(row[i]) for row in rows)) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"
