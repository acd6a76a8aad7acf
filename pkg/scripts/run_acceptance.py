#!/usr/bin/env python3
"""Run the acceptance criteria without pytest; one PASS/FAIL line each."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from test_acceptance import CRITERIA  # noqa: E402


def main() -> int:
    results = [crit()[0] for crit in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria passed")
    return 0 if all(results) else 1


if __name__ == "__main__":
    sys.exit(main())
