"""JSON, CSV and graph6-line emitters.  Output is deterministic: JSON keeps the
declared field order and CSV uses a fixed column order."""

from __future__ import annotations

import csv
import io
import json

from .verify import CSV_COLUMNS


def to_json(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=True) + "\n"


def rows_to_csv(rows, columns=CSV_COLUMNS) -> str:
    """Header row then one line per row; ``None`` becomes an empty field."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        d = row if isinstance(row, dict) else row.to_dict()
        writer.writerow(["" if d[c] is None else d[c] for c in columns])
    return buf.getvalue()


def g6_lines(strings) -> str:
    return "".join(s + "\n" for s in strings)
