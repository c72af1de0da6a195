"""
Decomposing tensor products
===========================

``tensor_character`` uses the Brauer-Klimyk form of the product and
``decompose`` peels off irreducibles from the top of the dominance order.
"""

from flagrep.rep_theory import decompose, tensor_character, weyl_dimension
from flagrep.root_system import build_root_system

###############################################################################
# V(ρ) ⊗ V(ρ) for sl3.
rs = build_root_system("A", 2)
dec = decompose(rs, tensor_character(rs, rs.rho, rs.rho))
for weight, mult in dec.items():
    print(weight, mult, weyl_dimension(rs, weight))
print("total dimension", dec.dimension(rs))

###############################################################################
# The same square for so8 has 648 irreducible summands.
d4 = build_root_system("D", 4)
dec = decompose(d4, tensor_character(d4, d4.rho, d4.rho))
print(len(dec), "distinct summands,", dec.total_multiplicity, "in total")
print("largest multiplicity", max(dec.parts.values()))
