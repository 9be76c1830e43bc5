"""
Two continued-fraction calculi
==============================

A walk through the additive (Euclidean) and subtractive (Hirzebruch-Jung)
expansions of a rational number and the exact algebra connecting them.
"""

from fractions import Fraction

from latticecf import cf

# Every rational has two canonical expansions: one built from additions,
# one from subtractions.  11/7 is the running example of the whole package.
x = Fraction(11, 7)
e = cf.expand_e(x)
h = cf.expand_hj(x)
print(f"{x} = {e} = {h}")

# Both are quotients of continuant polynomials: the numerator of the
# subtractive form is Z-(2,3,2,2), its denominator drops the first term.
print("Z-(2,3,2,2) =", cf.continuant("-", (2, 3, 2, 2)))
print("Z-(3,2,2)   =", cf.continuant("-", (3, 2, 2)))

# The rewriting between the two calculi is purely symbolic: every additive
# term a contributes either a run of 2s or a bumped entry.
print("e_to_hj:", cf.e_to_hj(e.terms), "   hj_to_e:", cf.hj_to_e(h.terms))

# The involution x -> x/(x-1) of (1, oo) acts on expansions by simple
# two-case rules; on subtractive expansions it swaps the block data.
image = cf.involute(x)
print(f"involute({x}) = {image} = {cf.expand_e(image)} = {cf.expand_hj(image)}")
print("involute_e :", cf.involute_e(e.terms))
print("involute_hj:", cf.involute_hj(h.terms))

# Riemenschneider's staircase makes the subtractive involution visible:
# lay out row k with (term_k - 1) points, each new row starting under the
# last point of the previous one, and read columns.
diagram = cf.staircase(h.terms)
for offset, count in zip(diagram.column_offsets(), diagram.rows):
    print(" " * offset + "*" * count)
print("columns read back:", cf.staircase_dual(diagram))

# Reversing a subtractive expansion inverts the denominator modulo the
# numerator: [2,3,2,2] reversed gives 11/8 and 7 * 8 = 56 = 1 (mod 11).
terms, value = cf.reverse_hj(11, 7)
print("reversed:", terms, "=", value)

# Eventually periodic expansions convert symbolically as well; a stream of
# 1s (the golden ratio) becomes the stream 2, 3, 3, 3, ...
golden = cf.PeriodicCF(cf.E, (), (1,))
print("golden-ratio stream:", golden, "->", cf.e_to_hj_periodic(golden))
