#!/usr/bin/env python3
"""Emit the asymptotic-temperature isotherm dataset over the Bloch sphere.

Produces a (gamma, phi) grid of T/T_0 values at theta = pi/4 suitable for
contour plotting.  Thin wrapper over the ``isotherms`` CLI subcommand so
that the dataset carries the standard reproducibility header.
"""

import sys

from cyclewalk.cli import main

if __name__ == "__main__":
    args = ["isotherms", "--n", "100", "--grid", "181x181", "--out", "isotherms.csv"]
    sys.exit(main(args + sys.argv[1:]))
