"""
Polyvector fields and V(ρ) ⊗ V(ρ)
=================================

The Euler characteristic of all exterior powers of the tangent bundle
together equals V(ρ) ⊗ V(ρ), so its decomposition bounds Hochschild
cohomology from below.
"""

from flagrep.flag_cohomology import (
    hh_component_report,
    polyvector_euler_decomposition,
    tangent_bundle_decomposition,
    verify_kostant,
    wahl_h0,
)
from flagrep.root_system import build_root_system

rs = build_root_system("A", 2)

###############################################################################
# Degree by degree for SL3.
for p in range(rs.num_positive_roots + 1):
    print(p, dict(polyvector_euler_decomposition(rs, p).items()))
print("all degrees", dict(polyvector_euler_decomposition(rs).items()))

###############################################################################
# Global vector fields give the adjoint representation.
print(dict(tangent_bundle_decomposition(rs).items()))

###############################################################################
# Sections of the next-to-top exterior power.
print(dict(wahl_h0(rs).items()))

###############################################################################
# Kostant's question for B3: does V(λ) occur exactly when λ <= 2ρ?
report = verify_kostant(build_root_system("B", 3))
print(report.conjecture_holds, len(report.support_tensor), report.counterexamples)

###############################################################################
# Lower bounds on Hochschild multiplicities for G2.
hh = hh_component_report(build_root_system("G", 2))
for row in hh.components[:5]:
    print(row.weight, row.lower_bound, row.candidate)
print(hh.note)
