"""Append-only JSONL journals for long classification runs.

A journal holds one JSON object per line.  Completed rows append a "row"
record carrying the census and the full candidate survey, so an interrupted
run picks up where it stopped instead of redoing finished rows.  Records are
plain dicts; numpy scalars are converted on the way out.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path

import numpy as np

from .catalogue import ROWS, RowParams
from .classify import RowResult, classify_row


def _plain(obj):
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON serializable: {type(obj)!r}")


def row_record(rr: RowResult) -> dict:
    """Flatten a RowResult into a JSON-ready dict."""
    return {
        "kind": "row",
        "row": rr.row,
        "params": asdict(rr.params),
        "census": {k: list(v) for k, v in rr.census().items()},
        "num": rr.num,
        "max_order": rr.max_order,
        "matches_reference": rr.matches_reference(),
        "notes": list(rr.notes),
        "modes": {name: asdict(m) for name, m in rr.modes.items()},
    }


class Journal:
    """One JSONL file; append() writes a line, records() reads them all back."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)

    def append(self, record: dict) -> None:
        with self.path.open("a") as fh:
            fh.write(json.dumps(record, default=_plain) + "\n")

    def records(self) -> list[dict]:
        if not self.path.exists():
            return []
        out = []
        with self.path.open() as fh:
            for line in fh:
                line = line.strip()
                if line:
                    out.append(json.loads(line))
        return out

    def completed_rows(self) -> dict[int, dict]:
        """row number -> its latest finished record."""
        done = {}
        for rec in self.records():
            if rec.get("kind") == "row":
                done[rec["row"]] = rec
        return done


def run_rows(rows, journal: Journal | None = None, log=None, **kwargs) -> list[dict]:
    """Classify each row, skipping rows the journal already finished.

    Returns one record per requested row, replayed from the journal when
    available, freshly computed (and appended) otherwise.
    """
    done = journal.completed_rows() if journal is not None else {}
    out = []
    for row in rows:
        params = ROWS[row] if isinstance(row, int) else row
        if params.row in done:
            if log:
                log(f"[{params.row}] replayed from journal")
            out.append(done[params.row])
            continue
        rr = classify_row(params, log=log, **kwargs)
        rec = row_record(rr)
        if journal is not None:
            journal.append(rec)
        out.append(rec)
    return out
