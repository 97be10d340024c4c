#!/usr/bin/env python3
"""Print character-oracle dimension tables for a range of n.

The oracle averages exterior-power characters over conjugacy classes,
so it reaches n well past what the explicit kernel engine handles;
each row is checked against the closed-form vector on the fly.

usage: oracle_tables.py [n_max]
"""

import sys

from equivext.characters import invariant_dim
from equivext.dimformulas import TABLE_FAMILIES, formula_table
from equivext.spaces import SpaceDescriptor


def main(n_max: int = 8) -> int:
    for n in range(2, n_max + 1):
        print(f"n = {n}")
        for family, (a, b) in TABLE_FAMILIES.items():
            dims = [invariant_dim(SpaceDescriptor(n, k, a, b)) for k in range(2 * n + 1)]
            match = dims == list(formula_table(family, n).dims)
            tag = "OK" if match else "MISMATCH"
            print(f"  {family:9s} ({','.join(map(str, dims))})  {tag}")
            if not match:
                return 1
    return 0


if __name__ == "__main__":
    sys.exit(main(int(sys.argv[1]) if len(sys.argv) > 1 else 8))
