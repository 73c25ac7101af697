#!/usr/bin/env python3
"""Print the graded dimension table of M_mu two ways and compare.

For hook partitions the table is computed both by derivative closure and as
the graded quotient by the explicit ideal generators; for other partitions
only the closure is available.

    python3 scripts/graded_tables.py 2,1
    python3 scripts/graded_tables.py 3,1 2,2 1,1,1,1
"""

import sys

from ghbasis.annihilator import quotient_hilbert
from ghbasis.delta import build_delta
from ghbasis.errors import NotAHookError
from ghbasis.linalg import derivative_closure
from ghbasis.partitions import hook_params, parse_partition
from math import factorial


def print_table(title, table):
    amax = max(a for a, _ in table)
    bmax = max(b for _, b in table)
    print(f"  {title} (rows: x-degree 0..{amax}, cols: y-degree 0..{bmax})")
    for a in range(amax + 1):
        row = " ".join(f"{table.get((a, b), 0):4d}" for b in range(bmax + 1))
        print(f"    {row}")


def main(argv):
    if not argv:
        argv = ["2,1", "2,2", "3,1"]
    for text in argv:
        mu = parse_partition(text)
        print(f"mu = ({text})  n = {mu.n}  n! = {factorial(mu.n)}")
        delta = build_delta(mu)
        dim, table = derivative_closure(delta)
        print(f"  dim M_mu by derivative closure: {dim}")
        print_table("closure table", table)
        try:
            hp = hook_params(mu)
        except NotAHookError:
            print("  (not a hook: no generator quotient to compare)")
            print()
            continue
        qt = quotient_hilbert(hp.K, hp.L)
        print(f"  quotient total by ideal generators: {qt.total} "
              f"(tables {'agree' if qt.table == table else 'DISAGREE'})")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
