"""
Characters and Demazure operators
=================================

A character is a finite sum of monomials e^μ with integer coefficients.
Applying the Demazure operator of w0 to a dominant monomial gives the
character of the irreducible module with that highest weight.
"""

from flagrep.character import Character, demazure_apply, demazure_word, diamond
from flagrep.rep_theory import freudenthal_character, irreducible_character, weyl_dimension
from flagrep.root_system import build_root_system

rs = build_root_system("A", 2)

###############################################################################
# One Demazure step on e^ρ gives a three-term string along α1.
print(demazure_apply(rs, 1, Character.monomial((1, 1))).as_dict())

###############################################################################
# The full sweep yields the adjoint representation of sl3.
adj = demazure_word(rs, rs.w0_word, Character.monomial((1, 1)))
for weight, mult in adj.items():
    print(weight, mult)
print("dim", adj.dimension, "Weyl formula:", weyl_dimension(rs, (1, 1)))

###############################################################################
# Freudenthal's recursion is an independent way to get the same numbers.
print(irreducible_character(rs, (2, 1)) == freudenthal_character(rs, (2, 1)))

###############################################################################
# The involution e^μ -> e^-μ turns a character into that of the dual module.
print(diamond(irreducible_character(rs, (1, 0))) == irreducible_character(rs, (0, 1)))
