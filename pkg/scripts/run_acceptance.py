#!/usr/bin/env python3
"""Run the acceptance suite and echo one line per criterion.

Usage: python3 scripts/run_acceptance.py
Equivalent to `pytest tests/test_acceptance.py -v -rA`; the slow rows make
this a coffee-length run.
"""

import subprocess
import sys
from pathlib import Path


def main() -> int:
    root = Path(__file__).resolve().parent.parent
    return subprocess.call(
        [sys.executable, "-m", "pytest", "tests/test_acceptance.py", "-v", "-rA"],
        cwd=root,
    )


if __name__ == "__main__":
    sys.exit(main())
