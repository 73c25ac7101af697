#!/usr/bin/env python3
"""Trace the rewriting of a monomial operator into the drawing basis.

Shows each anomaly classification and the replacement it triggers, then the
final normal form and the oracle check against Delta_mu.

    python3 scripts/rewrite_trace.py --k 1 --l 2 "y1*x2*x3"
"""

import argparse
import sys

from ghbasis.annihilator import classify_diagram, normal_form, reduce_step
from ghbasis.delta import build_delta
from ghbasis.hooks import s_monomial
from ghbasis.partitions import hook_partition
from ghbasis.poly import descent_key, format_monomial, parse_poly


def main(argv):
    parser = argparse.ArgumentParser()
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--l", type=int, required=True)
    parser.add_argument("operator")
    args = parser.parse_args(argv)
    K, L, n = args.k, args.l, args.k + args.l + 1

    poly = parse_poly(args.operator, n=n)
    if len(poly.terms) != 1:
        parser.error("operator must be a single monomial")
    op = next(iter(poly.terms))

    # worklist trace: rewrite the descent-largest non-drawing monomial first
    work = {op: 1}
    step = 0
    while True:
        todo = [m for m in work if classify_diagram(m, K, L).is_anomaly]
        if not todo:
            break
        m = max(todo, key=lambda mm: tuple(-v for v in descent_key(mm)))
        cls = classify_diagram(m, K, L)
        outs = reduce_step(m, K, L)
        step += 1
        print(f"step {step}: {format_monomial(m) or '1'}  [{cls.case} at place {cls.place}]")
        for c, mm in outs:
            print(f"    -> {c:+d} * {format_monomial(mm) or '1'}")
        coeff = work.pop(m)
        for c, mm in outs:
            work[mm] = work.get(mm, 0) + coeff * c
            if work[mm] == 0:
                del work[mm]
        # null operators vanish outright
        for mm in [m for m in work
                   if classify_diagram(mm, K, L).case == "null-operator"]:
            del work[mm]

    delta = build_delta(hook_partition(K, L))
    nf = normal_form(op, K, L, delta=delta, validate=True)
    print(f"\nnormal form of {format_monomial(op) or '1'} "
          f"({len(nf)} drawing terms, oracle-checked):")
    for d, c in sorted(nf.items(), key=lambda item: format_monomial(s_monomial(item[0], n))):
        print(f"    {c:+d} * d[{format_monomial(s_monomial(d, n)) or '1'}]")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
