#!/usr/bin/env python3
"""Run the full property-check grid and print the human-readable report.

Usage:
    python3 scripts/run_checks.py [grid]

where grid is 'default', 'quick', or a comma-separated key=value spec such
as 'lengths=8-16,ks=2/3,seed=7' (see unarynet.checks.parse_grid). Exits 0
when every cell passes, 2 otherwise.
"""

import sys
import time

from unarynet.checks import parse_grid, run_property_checks


def main() -> int:
    spec = sys.argv[1] if len(sys.argv) > 1 else "default"
    grid = parse_grid(spec)
    start = time.perf_counter()
    report = run_property_checks(grid)
    elapsed = time.perf_counter() - start
    print(report.render_human())
    print(f"({elapsed:.2f}s)")
    return 0 if report.passed else 2


if __name__ == "__main__":
    sys.exit(main())
