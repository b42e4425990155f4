"""
Coset counts across the whole family
====================================

For the rank-two rational form of SO(n,2) the two standard maximal parabolic
subgroups have coset orders given by closed formulas:

    |W^{P1}| = n+1 (n odd),  n+2 (n even)
    |W^{P2}| = (n+1)(n-1)/2 (n odd),  (n+2)n/2 (n even)

The orbit walk reproduces them exactly, and the per-length counts N(l) form a
palindromic staircase whose peak sits at the middle lengths.
"""

from orthoweyl import (
    MaximalParabolic,
    build_hasse,
    group_spec,
    length_histogram,
    parabolic_choice,
    render_word,
)

print(f"{'n':>3} {'type':>5} {'|W^P1|':>7} {'|W^P2|':>7}")
for n in range(5, 21):
    g = group_spec(n)
    counts = {}
    for p in MaximalParabolic:
        counts[p] = len(build_hasse(parabolic_choice(g, p)).nodes)
    kind = f"{g.datum.kind.value}{g.k}"
    print(f"{n:>3} {kind:>5} {counts[MaximalParabolic.P1]:>7} {counts[MaximalParabolic.P2]:>7}")

# The second-parabolic staircase for one odd and one even case.
for n in (9, 10):
    g = group_spec(n)
    hist = length_histogram(build_hasse(parabolic_choice(g, MaximalParabolic.P2)))
    print(f"\nn={n}: N(l) =", " ".join(str(hist[l]) for l in sorted(hist)))

# The first parabolic is almost a chain: one representative per length, with a
# single fork of two representatives at length k-1 in the even case.
g = group_spec(8)
print(f"\nfirst parabolic of SO(8,2) (type {g.datum.kind.value}{g.k}):")
for node in build_hasse(parabolic_choice(g, MaximalParabolic.P1)).nodes:
    print(f"  l={node.length}  {render_word(node.word)}")
