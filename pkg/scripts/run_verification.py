#!/usr/bin/env python3
"""Run the default verification batch (n = 2..4, remark check on)."""

import sys

from equivext.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify", "--n-min", "2", "--n-max", "4", "--check-remark"]))
