"""
Root systems, Weyl group words and the dominance order
======================================================

Weights are integer tuples in the basis of fundamental weights.
"""

from flagrep.root_system import (
    build_root_system,
    dominance_leq,
    dot_action,
    enumerate_dominant_below,
    simple_reflection,
)

###############################################################################
# G2 in Bourbaki numbering: the first simple root is short.
rs = build_root_system("G", 2)
print(rs.cartan)
print("positive roots:", rs.positive_roots)
print("rho:", rs.rho, "highest root:", rs.highest_root)

###############################################################################
# A reduced word for the longest element. It sends rho to -rho.
print("w0 =", rs.w0_word)
v = rs.rho
for i in reversed(rs.w0_word):
    v = simple_reflection(rs, i, v)
print("w0(rho) =", v)

###############################################################################
# The dot action w.λ = w(λ + ρ) - ρ fixes -ρ.
print(dot_action(rs, [1, 2], tuple(-x for x in rs.rho)))

###############################################################################
# Dominant weights below 2ρ. These index the candidate summands of V(ρ)⊗V(ρ).
two_rho = tuple(2 * x for x in rs.rho)
below = enumerate_dominant_below(rs, two_rho)
print(len(below), "dominant weights below", two_rho)
print(below)
print(dominance_leq(rs, (1, 0), two_rho), dominance_leq(rs, two_rho, (1, 0)))
