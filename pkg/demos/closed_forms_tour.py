#!/usr/bin/env python3
"""Tour of the closed-form anti-Ramsey values and bounds.

AR(n, G) is the least number of colors that forces a rainbow copy of G in
any edge-coloring of K_n.  For the families handled here the value is linear
in n once n clears a family-specific threshold; this script evaluates the
closed forms, shows a validity window in action, and prints a bound pair
whose upper bound is genuinely fractional.
"""

from fractions import Fraction

from antiramsey import (
    TransferParams,
    TriplePath,
    ar_cycle,
    ar_family,
    ar_matching,
    ar_path,
    cycle_matching_bounds,
    integer_bounds,
    matching_step_threshold,
    parse_family,
    transfer_upper_bound,
)


def banner(title):
    print()
    print("=" * 64)
    print(title)
    print("=" * 64)


banner("Exact values for the basic families")
rows = [
    ("P6 (path, 5 edges)", ar_path(20, 5)),
    ("C4 (cycle)", ar_cycle(10, 4)),
    ("3P2 (matching)", ar_matching(8, 3)),
    ("7P2 perfect matching on K14", ar_matching(14, 7)),
]
for label, rep in rows:
    print(f"  AR(n={rep.n}, {label:32s}) = {rep.exact}")

banner("Mixed families through one entry point")
for text, n in [("P3+2P2", 18), ("C3+2P2", 20), ("2P3", 12), ("2P2+3P3", 40)]:
    rep = ar_family(n, parse_family(text))
    print(f"  AR({n}, {text:8s}) = {rep.exact}   window ok: {rep.valid['exact']}")

banner("Validity windows carry values as data outside the window")
spec = TriplePath(3)
for n in (10, 13, 20):
    rep = ar_family(n, spec)
    print(f"  n={n:3d}: formula value {rep.exact} (valid: {rep.valid['exact']}), "
          f"best lower bound {rep.lower}")
print("  below n=12 the clique-on-7-vertices construction beats the linear form,")
print("  so the report's lower bound switches to it")

banner("A bound pair with a fractional upper bound")
rep = cycle_matching_bounds(11, 4, 1)
lo, hi = integer_bounds(rep)
print(f"  C4+P2 at n=11: lower {rep.lower}, upper {rep.upper} (~{float(rep.upper):.2f})")
print(f"  best integer bounds for display: {lo} <= AR <= {hi}")

banner("The transfer step behind the upper bounds")
# a linear bound for a small base family transfers to any larger number of
# appended edges, above a computable threshold
params = TransferParams(fixed_vertices=3, fixed_edges=2, base_count=2,
                        slope_shift=Fraction(-1), tail=Fraction(1), base_min_n=7)
g2 = matching_step_threshold(params)
print(f"  threshold constant for P3 + t edges: {g2}")
for t in (3, 4, 6):
    tb = transfer_upper_bound(40, t, params, step="P2")
    print(f"  t={t}: AR(40, P3+{t}P2) <= {tb.value}  "
          f"(needs n > 5/2*{t}+{g2} = {Fraction(5, 2) * t + g2})")
