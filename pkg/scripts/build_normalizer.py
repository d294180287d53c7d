#!/usr/bin/env python3
"""Assemble normalizers for desk rows and tabulate layer data.

Usage: python3 scripts/build_normalizer.py [rows...]
Prints |N|, core size, form group order, and the structure prediction per
core type.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from regorb.catalogue import DESK_ROWS, ROWS
from regorb.normalizer import assemble_full, predicted_order


def main() -> int:
    rows = [int(a) for a in sys.argv[1:]] or sorted(DESK_ROWS)
    print(f"{'row':>4} {'mode':>11} {'|N|':>7} {'core':>5} {'form':>6} {'predicted':>9}")
    for row in rows:
        p = ROWS[row]
        for mode in p.modes():
            res = assemble_full(p.r, p.m, p.p, p.a, p.b, mode)
            want = predicted_order(p.r, p.m, p.p, p.a, p.b, mode)
            flag = "" if res.group.order == want else "  <- differs!"
            print(f"{row:>4} {mode:>11} {res.group.order:>7} "
                  f"{len(res.core_ids):>5} {res.form_order:>6} {want:>9}{flag}",
                  flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
