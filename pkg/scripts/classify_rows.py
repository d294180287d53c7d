#!/usr/bin/env python3
"""Classify desk rows and print the census with reference comparison.

Usage: python3 scripts/classify_rows.py [rows...]
Defaults to all desk rows, slow ones last.  Results append to
checkpoints/journal.jsonl so an interrupted run resumes where it stopped.
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from regorb.catalogue import reference_counts
from regorb.serial import Journal, run_rows

DEFAULT_ORDER = [62, 63, 64, 66, 67, 68, 69, 49, 65, 48, 104, 50, 52, 19, 117]


def main() -> int:
    rows = [int(a) for a in sys.argv[1:]] or DEFAULT_ORDER
    journal = Journal(Path("checkpoints") / "journal.jsonl")
    bad = 0
    t0 = time.time()
    for rec in run_rows(rows, journal=journal, log=lambda s: print(s, flush=True)):
        row = rec["row"]
        verdict = "match" if rec["matches_reference"] else "MISMATCH"
        if verdict != "match":
            bad += 1
        print(f"row {row}: census={rec['census']} "
              f"reference={reference_counts(row)} [{verdict}]", flush=True)
    print(f"done in {time.time() - t0:.1f}s, {bad} mismatching row(s)")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
