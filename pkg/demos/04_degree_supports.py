"""
Degree bookkeeping and the brute-force cross-check
==================================================

Combining the per-representative data with the cuspidal degrees of the Levi
subgroups gives, for each parabolic, the interval of cohomology degrees the
corresponding summand can occupy:

    first parabolic:  [n, (3n-1)/2] (odd),  [n, 3n/2] (even)
    second parabolic: [n, 2n-2] — up to the virtual cohomological dimension.

The full report bundles these with the vanishing bounds (l0, q0, vcd) =
(0, n, 2n-2) and the Levi lists.  At small rank everything is re-derivable by
brute force over the whole Weyl group, which is how the library verifies
itself.
"""

from orthoweyl import (
    MaximalParabolic,
    crossed_simple_roots,
    full_report,
    group_spec,
    minimal_reps_bruteforce,
    word_action_matrix,
)
from orthoweyl.hasse import build_hasse
from orthoweyl.orthogroup import parabolic_choice

for n in (5, 6, 9):
    report = full_report(group_spec(n))
    b = report.bounds
    print(f"n={n}: (l0, q0, vcd) = ({b.l0}, {b.q0}, {b.vcd})")
    for pr in report.parabolics:
        line = (
            f"  {pr.parabolic.name}: support [{pr.support.q_min},{pr.support.q_max}]"
            f", cuspidal degrees {set(pr.cuspidal_degrees)}"
            f", |W^P| = {pr.coset_count}"
        )
        if pr.weight_constraint:
            line += f", needs {pr.weight_constraint}"
        print(line)
        print("     Levi subgroups:", "; ".join(s.render() for s in pr.levi_subgroups))

# Brute-force oracle: enumerate all 2^k k! (or half of them, even case) group
# elements, filter the minimal representatives, compare element-for-element.
print("\noracle cross-check (small rank):")
for n in (5, 6, 7, 8):
    g = group_spec(n)
    for p in MaximalParabolic:
        walk = {
            word_action_matrix(g.datum, node.word)
            for node in build_hasse(parabolic_choice(g, p)).nodes
        }
        oracle = {
            word_action_matrix(g.datum, w)
            for w in minimal_reps_bruteforce(g.datum, crossed_simple_roots(g, p))
        }
        verdict = "agree" if walk == oracle else "DISAGREE"
        print(f"  n={n} {p.name}: {len(walk)} elements, walk and brute force {verdict}")
