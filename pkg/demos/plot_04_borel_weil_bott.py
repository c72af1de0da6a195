"""
Cohomology of line bundles on G/B
=================================

``bwb_line_bundle`` takes the weight λ of L(λ) and returns the single
nonzero cohomology group, if any.
"""

from flagrep.bwb import bwb_line_bundle
from flagrep.character import Character
from flagrep.flag_cohomology import euler_characteristic
from flagrep.root_system import build_root_system

###############################################################################
# On the projective line: O(2), O(-1) and O(-2).
p1 = build_root_system("A", 1)
for k in (2, -1, -2):
    print(k, bwb_line_bundle(p1, (k,)).describe())

###############################################################################
# On the flag variety of SL3, walk along a line of weights.
a2 = build_root_system("A", 2)
for k in range(-5, 3):
    print((k, 1), bwb_line_bundle(a2, (k, 1)).describe())

###############################################################################
# The Euler characteristic, computed by a Demazure sweep, carries the sign
# of the cohomological degree.
chi = euler_characteristic(a2, Character.monomial((3, -2)))
print(bwb_line_bundle(a2, (-3, 2)).describe(), chi.dimension)
