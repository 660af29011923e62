#!/usr/bin/env python3
"""Sweep the generalization radius on a CSV dataset and print the table.

Usage:
    python3 scripts/radius_sweep.py data/angles.csv [r_max] [bins] [length]

Trains one network per radius 0..r_max on the quantized dataset and reports
training accuracy, exact matches, no-decision count, and the Hamming ball
volume at each radius. With the defaults the sweep reproduces the saturation
behaviour: accuracy is perfect at r = 0 and decays as the balls of distinct
classes begin to overlap.
"""

import sys

from unarynet.dataset import (
    QuantizationSpec,
    load_dataset,
    quantize_encode,
    sweep_radius,
    sweep_table,
)


def main() -> int:
    if len(sys.argv) < 2:
        print(__doc__.strip(), file=sys.stderr)
        return 1
    path = sys.argv[1]
    r_max = int(sys.argv[2]) if len(sys.argv) > 2 else 4
    ds = load_dataset(path)
    default_bins = max(hi - lo + 1 for lo, hi in ds.feature_ranges)
    bins = int(sys.argv[3]) if len(sys.argv) > 3 else default_bins
    length = int(sys.argv[4]) if len(sys.argv) > 4 else bins
    samples = quantize_encode(ds, QuantizationSpec(bins=bins, length=length))
    rows = sweep_radius(samples, range(r_max + 1))
    print(f"{path}: {len(samples)} samples, bins={bins}, length={length}")
    print(sweep_table(rows))
    return 0


if __name__ == "__main__":
    sys.exit(main())
