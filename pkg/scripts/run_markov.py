#!/usr/bin/env python3
"""Emit classical two-state chain trajectories for a ladder of coin biases.

Runs the Markov analogue from a fully polarized start for several theta
values, one time series per theta, so the exponential equilibration rates
|cos(2 theta)| can be compared against the quantum mixing behavior.
"""

import math
import sys

from cyclewalk.cli import main

if __name__ == "__main__":
    code = 0
    for label, theta in [
        ("pi_over_8", math.pi / 8),
        ("pi_over_4", math.pi / 4),
        ("pi_over_3", math.pi / 3),
    ]:
        args = [
            "markov",
            "--theta", repr(theta),
            "--gamma", "0",
            "--t-max", "100",
            "--out", f"markov_theta_{label}.csv",
        ]
        code = max(code, main(args + sys.argv[1:]))
    sys.exit(code)
