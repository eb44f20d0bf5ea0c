#!/usr/bin/env python3
"""Run the full verification sweep and exit nonzero on any failure.

Thin wrapper over ``parkposet verify-all`` so the sweep can be launched
without installing the console script.
"""

import sys

from parkposet.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify-all", *sys.argv[1:]]))
