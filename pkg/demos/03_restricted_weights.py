"""
Restricted weights and evaluation coefficients
==============================================

Each representative w carries two exact pieces of data, both affine-linear in
the highest-weight coordinates λ1, ..., λk:

  * the highest weight of the Levi module in the nilpotent cohomology
    decomposition, restricted to the semisimple part: (w(λ+ρ) - ρ)|_b;
  * the normalized coefficient a of the evaluation point -w(λ+ρ)|_a = a·ρ|_a.

All arithmetic is exact rational; nothing is floating point.  The sign of a
flips exactly at the middle length, and once 2·l(w) reaches the dimension of
the nilpotent radical, holomorphy of the associated Eisenstein series at that
point is automatic.
"""

from orthoweyl import (
    MaximalParabolic,
    build_hasse,
    evaluation_coefficient,
    group_spec,
    kostant_restriction,
    parabolic_choice,
    render_word,
)

g = group_spec(7)
p = MaximalParabolic.P1
print(f"SO(7,2), first parabolic (type {g.datum.kind.value}{g.k}), symbolic listing:\n")
print(f"{'l':>2}  {'word':<22} {'restricted weight':<34} a")
for node in build_hasse(parabolic_choice(g, p)).nodes:
    mu = ",".join(f.render() for f in kostant_restriction(g, p, node.word))
    a = evaluation_coefficient(g, p, node.word).render()
    print(f"{node.length:>2}  {render_word(node.word):<22} ({mu})  {a}")

# Evaluating at a concrete regular weight turns every cell into a rational.
lam = [1, 1, 1, 1]
print(f"\nsame listing at λ = {tuple(lam)}:")
from orthoweyl import Weight

numeric = Weight.from_constants(lam, g.k)
for node in build_hasse(parabolic_choice(g, p)).nodes:
    a = evaluation_coefficient(g, p, node.word, numeric)
    holo = 2 * node.length >= g.n
    print(f"  l={node.length}: a = {a.render():>6}   holomorphy guaranteed: {holo}")

# The even case has one genuinely new phenomenon: two representatives of
# length k-1 whose restricted weights can never have equal last coordinates,
# so they drop out of the cohomological bookkeeping.
g6 = group_spec(6)
print("\nSO(6,2), first parabolic, the two length-%d rows:" % (g6.k - 1))
for node in build_hasse(parabolic_choice(g6, MaximalParabolic.P1)).nodes:
    if node.length == g6.k - 1:
        mu = ",".join(f.render() for f in kostant_restriction(g6, MaximalParabolic.P1, node.word))
        print(f"  {render_word(node.word):<12} ({mu})")
